"""Operational core: moment sequences, umbral series, Mellin machinery.

A moment sequence phi is kept in Gamma-ratio form, which fixes its analytic
continuation; an umbral series is the associated x-expansion
C x^p sum_k phi(k+s) (-a x^m)^k / k!.  The Mellin evaluator turns such a
series into a closed form in one step, and the Mellin-multiplier engine
applies a dilation-kernel symbol F(x d/dx) term by term.

All types are immutable values and all operations are pure.
"""

from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass
from itertools import count
from typing import Callable

from .errors import DomainError, KernelDomainError, PoleError, StripError
from .specfun import DEFAULT_TOL, gamma, gamma_sign, log_gamma
from .summation import DEFAULT_CAP, sum_series

__all__ = [
    "GammaRatioSequence",
    "UmbralSeries",
    "MellinMultiplier",
    "MultiplierKind",
    "PowerSeriesSpec",
    "phi_eval",
    "eval_umbral_series",
    "mellin_master",
    "mellin_master_strided",
    "apply_mellin_multiplier",
    "constant_phi",
    "factorial_phi",
    "bessel_phi",
    "struve_phi",
    "bessel_series",
    "struve_series",
    "exponential_series",
    "rational_series",
    "gaussian_series",
    "bessel_power_series",
    "monomial_spec",
    "gaussian_kernel",
    "lorentz_power",
    "borel_factorial",
    "beta_kernel",
    "custom_multiplier",
]

# Tolerance used when deciding whether a real Gamma argument sits on a pole.
_POLE_TOL = 1e-12


@dataclass(frozen=True)
class GammaRatioSequence:
    """Moment functional phi(s) = scale * prod Gamma(shift_i + slope_i s)
    / prod Gamma(shift_j + slope_j s), with positive slopes.

    The Gamma-ratio form guarantees a well-defined analytic continuation,
    which the Mellin evaluator relies on.  phi(0) must be finite and
    nonzero.
    """

    scale: complex = 1.0
    numer: tuple = ()
    denom: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "numer", tuple((float(s), float(m)) for s, m in self.numer))
        object.__setattr__(self, "denom", tuple((float(s), float(m)) for s, m in self.denom))
        if self.scale == 0:
            raise DomainError("GammaRatioSequence scale must be nonzero")
        for shift, slope in self.numer + self.denom:
            if slope <= 0:
                raise DomainError("GammaRatioSequence slopes must be positive")
        value = phi_eval(self, 0.0)
        if value == 0 or not (math.isfinite(value.real) and math.isfinite(value.imag)):
            raise DomainError("GammaRatioSequence must have finite nonzero phi(0)")

    def __call__(self, s):
        return phi_eval(self, s)


def _classify_pole(arg: float):
    """Return the pole index n (arg ~ -n) or None."""
    near = round(arg)
    if near <= 0 and abs(arg - near) <= _POLE_TOL * max(1.0, abs(arg)):
        return int(-near)
    return None


def phi_eval(phi: GammaRatioSequence, s) -> complex:
    """Evaluate the continued moment sequence at s.

    A denominator factor at a Gamma pole makes the whole value exactly 0
    unless a numerator factor is simultaneously at a pole, in which case the
    finite residue-ratio limit is taken.  An uncancelled numerator pole
    raises PoleError with the factor index.
    """
    s_complex = isinstance(s, complex) and s.imag != 0.0
    if s_complex:
        total = cmath.log(complex(phi.scale))
        for shift, slope in phi.numer:
            total += log_gamma(shift + slope * s)
        for shift, slope in phi.denom:
            total -= log_gamma(shift + slope * s)
        return cmath.exp(total)

    s = s.real if isinstance(s, complex) else float(s)
    num_poles = []
    num_regular = []
    for idx, (shift, slope) in enumerate(phi.numer):
        arg = shift + slope * s
        n = _classify_pole(arg)
        if n is None:
            num_regular.append(arg)
        else:
            num_poles.append((idx, n, slope))
    den_poles = []
    den_regular = []
    for idx, (shift, slope) in enumerate(phi.denom):
        arg = shift + slope * s
        n = _classify_pole(arg)
        if n is None:
            den_regular.append(arg)
        else:
            den_poles.append((idx, n, slope))

    if len(num_poles) > len(den_poles):
        idx, n, _ = num_poles[len(den_poles)]
        raise PoleError(-n, factor_index=idx,
                        message=f"uncancelled numerator Gamma pole in factor {idx} at s={s}")
    if len(den_poles) > len(num_poles):
        return complex(0.0)

    limit = 1.0
    for (_, n1, m1), (_, n2, m2) in zip(num_poles, den_poles):
        # Gamma(arg) ~ (-1)^n / (n! * slope * ds) near a simple pole, so the
        # paired ratio tends to a finite limit.
        sign = -1.0 if (n1 + n2) % 2 else 1.0
        limit *= sign * (m2 / m1) * math.exp(math.lgamma(n2 + 1.0) - math.lgamma(n1 + 1.0))

    sign = 1.0
    log_mag = 0.0
    for arg in num_regular:
        sign *= gamma_sign(arg)
        log_mag += math.lgamma(arg)
    for arg in den_regular:
        sign *= gamma_sign(arg)
        log_mag -= math.lgamma(arg)
    return complex(phi.scale) * limit * sign * math.exp(log_mag)


def phi_signed_log(phi: GammaRatioSequence, s: float):
    """(unit-magnitude prefactor, log magnitude) of phi at real s.

    The prefactor is 0 when a denominator pole annihilates the value.  Used
    to assemble series terms whose separate pieces would overflow a double.
    """
    value_scale = complex(phi.scale)
    pref = value_scale / abs(value_scale)
    log_mag = math.log(abs(value_scale))
    for shift, slope in phi.numer:
        arg = shift + slope * s
        if _classify_pole(arg) is not None:
            raise PoleError(arg, message=f"numerator Gamma pole at s={s}")
        pref *= gamma_sign(arg)
        log_mag += math.lgamma(arg)
    for shift, slope in phi.denom:
        arg = shift + slope * s
        if _classify_pole(arg) is not None:
            return complex(0.0), 0.0
        pref *= gamma_sign(arg)
        log_mag -= math.lgamma(arg)
    return pref, log_mag


# -- cataloged moment sequences ---------------------------------------------


def constant_phi() -> GammaRatioSequence:
    """phi(s) = 1, the moment law of exp(-x)."""
    return GammaRatioSequence()


def factorial_phi() -> GammaRatioSequence:
    """phi(s) = Gamma(1+s), the moment law of 1/(1+x)."""
    return GammaRatioSequence(numer=((1.0, 1.0),))


def bessel_phi() -> GammaRatioSequence:
    """phi(s) = 1/Gamma(1+s), the Bessel moment law."""
    return GammaRatioSequence(denom=((1.0, 1.0),))


def struve_phi(nu: float) -> GammaRatioSequence:
    """phi(s) = Gamma(s+1) / (Gamma(s+3/2) Gamma(s+nu+3/2))."""
    return GammaRatioSequence(numer=((1.0, 1.0),),
                              denom=((1.5, 1.0), (nu + 1.5, 1.0)))


@dataclass(frozen=True)
class UmbralSeries:
    """f(x) = C x^p sum_k phi(k+s) (-a x^m)^k / k!."""

    phi: GammaRatioSequence
    prefactor_power: float = 0.0
    shift: float = 0.0
    arg_power: int = 1
    arg_scale: complex = 1.0
    overall_scale: complex = 1.0

    def __post_init__(self):
        if self.shift < 0:
            raise DomainError("UmbralSeries shift must be >= 0")
        if not isinstance(self.arg_power, int) or self.arg_power < 1:
            raise DomainError("UmbralSeries arg_power must be a positive integer")

    def coefficient(self, k: int) -> complex:
        """Coefficient of x^{p + m k} in the expanded series."""
        u = (-self.arg_scale) ** k / math.factorial(k)
        return self.overall_scale * phi_eval(self.phi, k + self.shift) * u


# -- cataloged umbral series -------------------------------------------------


def bessel_series(n: int) -> UmbralSeries:
    """Series evaluating to J_n(2x) as a function of x."""
    if not isinstance(n, int) or n < 0:
        raise DomainError("bessel_series needs integer n >= 0")
    return UmbralSeries(bessel_phi(), prefactor_power=float(n), shift=float(n),
                        arg_power=2)


def struve_series(nu: float, b: float = 1.0) -> UmbralSeries:
    """Series evaluating to the Struve function of b*x as a function of x."""
    if b <= 0:
        raise DomainError("struve_series needs b > 0")
    half = 0.5 * b
    return UmbralSeries(struve_phi(nu), prefactor_power=nu + 1.0, shift=0.0,
                        arg_power=2, arg_scale=half * half,
                        overall_scale=half ** (nu + 1.0))


def exponential_series() -> UmbralSeries:
    """Series evaluating to exp(-x)."""
    return UmbralSeries(constant_phi())


def rational_series() -> UmbralSeries:
    """Series whose Mellin data represents 1/(1+x) (converges for |x| < 1)."""
    return UmbralSeries(factorial_phi())


def gaussian_series() -> UmbralSeries:
    """Series evaluating to exp(-x^2)."""
    return UmbralSeries(constant_phi(), arg_power=2)


def eval_umbral_series(f: UmbralSeries, x, tol: float = DEFAULT_TOL,
                       max_terms: int = DEFAULT_CAP) -> complex:
    """Sum the series at x to the requested relative tolerance."""
    z = complex(x)
    p = f.prefactor_power
    if z == 0:
        if p > 0:
            return complex(0.0)
        if p == 0:
            return complex(f.overall_scale) * phi_eval(f.phi, f.shift)
        raise DomainError("umbral series with negative prefactor power at x = 0")
    prefactor = complex(f.overall_scale) * z ** p
    w = -complex(f.arg_scale) * z ** f.arg_power

    def terms():
        u = complex(1.0)
        for k in count():
            yield phi_eval(f.phi, k + f.shift) * u
            u *= w / (k + 1.0)

    value, _ = sum_series(terms(), tol, cap=max_terms)
    return prefactor * value


def mellin_master(f: UmbralSeries, nu) -> complex:
    """Half-line Mellin transform of a plain moment series.

    For f(x) = C sum_k phi(k) (-x)^k / k! the transform at exponent nu is
    C Gamma(nu) phi(-nu).  The continued sequence is evaluated at the
    negated exponent; the alternative sign fails its own worked examples.
    Requires Re nu > 0; the caller owns the upper end of the strip.
    """
    if not (f.prefactor_power == 0.0 and f.shift == 0.0
            and f.arg_power == 1 and f.arg_scale == 1.0):
        raise DomainError("mellin_master needs p = 0, s = 0, m = 1, a = 1; "
                          "use mellin_master_strided for the general shape")
    if complex(nu).real <= 0:
        raise StripError("mellin_master needs Re nu > 0")
    return complex(f.overall_scale) * complex(gamma(nu)) * phi_eval(f.phi, -nu)


def mellin_master_strided(f: UmbralSeries, nu) -> complex:
    """Half-line Mellin transform of the general umbral shape.

    Substituting u = a x^m reduces the integral to Gamma-ratio form:
    (C/m) a^{-w} Gamma(w) phi(s - w) with w = (nu + p)/m.
    """
    w = (complex(nu) + f.prefactor_power) / f.arg_power
    if w.real <= 0:
        raise StripError("mellin_master_strided needs Re((nu + p)/m) > 0")
    a = complex(f.arg_scale)
    if a == 0:
        raise DomainError("mellin_master_strided needs a nonzero arg_scale")
    if w.imag == 0.0:
        w = w.real
    return (complex(f.overall_scale) / f.arg_power * a ** (-w)
            * complex(gamma(w)) * phi_eval(f.phi, f.shift - w))


# ---------------------------------------------------------------------------
# Mellin multipliers (dilation-kernel symbols)
# ---------------------------------------------------------------------------


class MultiplierKind(enum.Enum):
    GAUSSIAN_KERNEL = "gaussian"
    LORENTZ_POWER = "lorentz_power"
    BOREL_FACTORIAL = "borel_factorial"
    BETA_KERNEL = "beta_kernel"
    CUSTOM = "custom"


@dataclass(frozen=True)
class MellinMultiplier:
    """Symbol F of the operator sending x^n to F(n) x^n.

    Each kind encodes the integral of a dilation family: F(a) is the
    integral of g(t)^a over the kernel's domain, so applying the multiplier
    to a power series reproduces integrals of f(x g(t)) term by term.
    """

    kind: MultiplierKind
    alpha: float | None = None
    beta: float | None = None
    func: Callable[[float], complex] | None = None
    custom_lower_bound: float = -math.inf

    @property
    def lower_bound(self) -> float:
        if self.kind is MultiplierKind.GAUSSIAN_KERNEL:
            return 0.0
        if self.kind is MultiplierKind.LORENTZ_POWER:
            return 0.5
        if self.kind is MultiplierKind.BOREL_FACTORIAL:
            return -1.0
        if self.kind is MultiplierKind.BETA_KERNEL:
            return -self.alpha
        return self.custom_lower_bound

    def _check(self, a: float) -> None:
        if a <= self.lower_bound:
            raise KernelDomainError(
                f"{self.kind.value} multiplier needs a > {self.lower_bound}, got {a}")

    def log_value(self, a: float) -> float:
        """log F(a); every built-in kernel has positive F on its domain."""
        self._check(a)
        if self.kind is MultiplierKind.GAUSSIAN_KERNEL:
            return 0.5 * (math.log(math.pi) - math.log(a))
        if self.kind is MultiplierKind.LORENTZ_POWER:
            return (0.5 * math.log(math.pi)
                    + math.lgamma(a - 0.5) - math.lgamma(a))
        if self.kind is MultiplierKind.BOREL_FACTORIAL:
            return math.lgamma(a + 1.0)
        if self.kind is MultiplierKind.BETA_KERNEL:
            return (math.lgamma(self.alpha + a) + math.lgamma(self.beta)
                    - math.lgamma(self.alpha + self.beta + a))
        raise DomainError("custom multipliers have no log form")

    def value(self, a: float):
        """F(a) itself."""
        if self.kind is MultiplierKind.CUSTOM:
            self._check(a)
            return self.func(a)
        return math.exp(self.log_value(a))


def gaussian_kernel() -> MellinMultiplier:
    """F(a) = sqrt(pi/a), the whole-line integral of exp(-a t^2)."""
    return MellinMultiplier(MultiplierKind.GAUSSIAN_KERNEL)


def lorentz_power() -> MellinMultiplier:
    """F(a) = sqrt(pi) Gamma(a-1/2)/Gamma(a), integral of (1+t^2)^{-a}."""
    return MellinMultiplier(MultiplierKind.LORENTZ_POWER)


def borel_factorial() -> MellinMultiplier:
    """F(a) = Gamma(a+1), the exponential moment integral."""
    return MellinMultiplier(MultiplierKind.BOREL_FACTORIAL)


def beta_kernel(alpha: float, beta: float) -> MellinMultiplier:
    """F(a) = B(alpha + a, beta), the Euler-kernel moment integral."""
    if alpha <= 0 or beta <= 0:
        raise DomainError("beta_kernel needs alpha > 0 and beta > 0")
    return MellinMultiplier(MultiplierKind.BETA_KERNEL, alpha=alpha, beta=beta)


def custom_multiplier(func: Callable[[float], complex],
                      lower_bound: float = -math.inf) -> MellinMultiplier:
    """Tabulated/callable symbol, intended for testing only."""
    return MellinMultiplier(MultiplierKind.CUSTOM, func=func,
                            custom_lower_bound=lower_bound)


@dataclass(frozen=True)
class PowerSeriesSpec:
    """Descriptor of f(x) = sum_k c(k) x^{m k + p}.

    The coefficient law is c(k) = alpha(k) * (-1)^k [if alternating] *
    geometric^k, with alpha in Gamma-ratio form.  The geometric factor
    covers laws like 4^{-k} that no Gamma ratio can express.  ``terms``
    truncates the law to a polynomial (terms=1 is a monomial).
    """

    alpha: GammaRatioSequence
    stride: int = 1
    offset: float = 0.0
    alternating: bool = False
    geometric: float = 1.0
    terms: int | None = None

    def __post_init__(self):
        if not isinstance(self.stride, int) or self.stride < 1:
            raise DomainError("PowerSeriesSpec stride must be a positive integer")
        if self.geometric <= 0:
            raise DomainError("PowerSeriesSpec geometric factor must be positive")
        if self.terms is not None and self.terms < 1:
            raise DomainError("PowerSeriesSpec needs at least one term")

    def coefficient(self, k: int) -> complex:
        if self.terms is not None and k >= self.terms:
            return complex(0.0)
        c = phi_eval(self.alpha, float(k)) * self.geometric ** k
        return -c if (self.alternating and k % 2) else c

    def evaluate(self, x: float, tol: float = DEFAULT_TOL,
                 max_terms: int = DEFAULT_CAP) -> complex:
        """Sum the described power series directly (no multiplier)."""
        return apply_mellin_multiplier(custom_multiplier(lambda a: 1.0),
                                       self, x, tol, max_terms)


def monomial_spec(n: float) -> PowerSeriesSpec:
    """The single-term series x^n."""
    return PowerSeriesSpec(GammaRatioSequence(), offset=float(n), terms=1)


def bessel_power_series(n: int) -> PowerSeriesSpec:
    """J_n(x) as a PowerSeriesSpec in x (coefficients 2^{-n} 4^{-k}/(k!(n+k)!))."""
    if not isinstance(n, int) or n < 0:
        raise DomainError("bessel_power_series needs integer n >= 0")
    alpha = GammaRatioSequence(scale=2.0 ** (-n),
                               denom=((1.0, 1.0), (n + 1.0, 1.0)))
    return PowerSeriesSpec(alpha, stride=2, offset=float(n),
                           alternating=True, geometric=0.25)


def apply_mellin_multiplier(multiplier: MellinMultiplier, spec: PowerSeriesSpec,
                            x: float, tol: float = DEFAULT_TOL,
                            max_terms: int = DEFAULT_CAP) -> complex:
    """sum_k c(k) F(m k + p) x^{m k + p}, the integral of the dilation family.

    Terms are assembled in log space so that factorially large symbol values
    (the exponential-moment kernel) cannot overflow against factorially
    small coefficients.
    """
    m, p = spec.stride, spec.offset
    multiplier._check(p)  # k = 0 is the smallest exponent reached
    if x < 0 and p != int(p):
        raise DomainError("negative x needs an integer offset power")
    if x == 0:
        if p > 0:
            return complex(0.0)
        if p == 0:
            return complex(spec.coefficient(0)) * complex(multiplier.value(0.0))
        raise DomainError("series with negative offset power at x = 0")

    log_ax = math.log(abs(x))
    xsign = 1.0 if x > 0 else -1.0
    custom = multiplier.kind is MultiplierKind.CUSTOM
    log_geom = math.log(spec.geometric)

    def term(k):
        a = m * k + p
        pref, log_mag = phi_signed_log(spec.alpha, float(k))
        if pref == 0:
            return complex(0.0)
        if spec.alternating and k % 2:
            pref = -pref
        if x < 0:
            pref *= xsign ** (int(round(a)) % 2)
        log_mag += k * log_geom + a * log_ax
        if custom:
            return pref * math.exp(log_mag) * complex(multiplier.value(a))
        return pref * math.exp(log_mag + multiplier.log_value(a))

    ks = range(spec.terms) if spec.terms is not None else count()
    value, _ = sum_series((term(k) for k in ks), tol, cap=max_terms)
    return complex(value)

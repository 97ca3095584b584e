"""Bessel functions J, Y and the Hankel function H2 = J - iY for real order
0 <= nu <= 3/2 (more generally nu >= 0) and real argument z > 0.

Two regimes:

* z <= ``ASYMPTOTIC_Z``: J from the ascending series; Y from Temme's series
  for Y_mu, Y_{mu+1} with |mu| <= 1/2, then upward recurrence. Temme's form
  is smooth through integer orders, so no special case is needed there.
* z > ``ASYMPTOTIC_Z``: the Hankel large-argument expansion, summed until
  its terms stop decreasing.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError, InvalidArgumentError

ASYMPTOTIC_Z = 14.0
EPS = 1e-17

# Taylor coefficients of 1/Gamma(1+x) about x = 0
_RGAMMA1P = (
    1.0, 0.57721566490153286061, -0.65587807152025388108, -0.042002635034095235529,
    0.1665386113822914895, -0.042197734555544336748, -0.0096219715278769735621,
    0.0072189432466630995424, -0.0011651675918590651121, -0.00021524167411495097282,
    0.00012805028238811618615, -0.000020134854780788238656, -1.2504934821426706573e-6,
    1.1330272319816958824e-6, -2.0563384169776071035e-7, 6.1160951044814158179e-9,
    5.0020076444692229301e-9, -1.1812745704870201446e-9, 1.0434267116911005105e-10,
    7.782263439905071254e-12, -3.6968056186422057082e-12, 5.100370287454475979e-13,
    -2.0583260535665067832e-14,
)


@dataclass(frozen=True)
class HankelValue:
    value: complex
    derivative: complex


@dataclass(frozen=True)
class BesselJY:
    j: float
    dj: float
    y: float
    dy: float


def _check(nu: float, z: float) -> None:
    if not z > 0:
        raise DomainError(f"Bessel argument must be positive, got {z}")
    if not nu >= 0:
        raise InvalidArgumentError(f"order must be nonnegative, got {nu}")


def _j_series(nu: float, z: float) -> float:
    half = 0.5 * z
    term = half**nu / math.gamma(nu + 1.0)
    total = term
    q = -half * half
    k = 0
    while True:
        k += 1
        term *= q / (k * (k + nu))
        total += term
        if abs(term) <= EPS * abs(total) and k > half:
            return total


def _gam12(mu: float) -> tuple[float, float, float, float]:
    """gam1 = (1/G(1-mu) - 1/G(1+mu)) / (2 mu), gam2 = (1/G(1-mu) + 1/G(1+mu)) / 2,
    plus 1/G(1+mu) and 1/G(1-mu)."""
    gam1 = -sum(c * mu ** (i - 1) for i, c in enumerate(_RGAMMA1P) if i % 2 == 1)
    gam2 = sum(c * mu**i for i, c in enumerate(_RGAMMA1P) if i % 2 == 0)
    gampl = gam2 - mu * gam1
    gammi = gam2 + mu * gam1
    return gam1, gam2, gampl, gammi


def _y_temme(mu: float, z: float) -> tuple[float, float]:
    """(Y_mu(z), Y_{mu+1}(z)) for |mu| <= 1/2."""
    x2 = 0.5 * z
    pimu = math.pi * mu
    fact = 1.0 if abs(pimu) < EPS else pimu / math.sin(pimu)
    d = -math.log(x2)
    e = mu * d
    fact2 = 1.0 if abs(e) < EPS else math.sinh(e) / e
    gam1, gam2, gampl, gammi = _gam12(mu)
    ff = 2.0 / math.pi * fact * (gam1 * math.cosh(e) + gam2 * fact2 * d)
    e = math.exp(e)
    p = e / (gampl * math.pi)
    q = 1.0 / (e * math.pi * gammi)
    pimu2 = 0.5 * pimu
    fact3 = 1.0 if abs(pimu2) < EPS else math.sin(pimu2) / pimu2
    r = math.pi * pimu2 * fact3 * fact3
    c = 1.0
    d = -x2 * x2
    total = ff + r * q
    total1 = p
    i = 0
    while True:
        i += 1
        ff = (i * ff + p + q) / (i * i - mu * mu)
        c *= d / i
        p /= i - mu
        q /= i + mu
        delta = c * (ff + r * q)
        total += delta
        delta1 = c * p - i * delta
        total1 += delta1
        if abs(delta) < (1.0 + abs(total)) * EPS and abs(delta1) < (1.0 + abs(total1)) * EPS and i > x2:
            break
    return -total, -total1 * 2.0 / z


def _y_pair(nu: float, z: float) -> tuple[float, float]:
    """(Y_nu, Y_{nu+1}) by Temme + upward recurrence."""
    n = int(math.floor(nu + 0.5))
    mu = nu - n
    y0, y1 = _y_temme(mu, z)
    order = mu + 1.0
    for _ in range(n):
        y0, y1 = y1, 2.0 * order / z * y1 - y0
        order += 1.0
    return y0, y1


def _hankel_asymptotic(nu: float, z: float, kind: int = 2) -> complex:
    """Large-z expansion of H^(kind)_nu(z); terms summed while decreasing."""
    four_nu2 = 4.0 * nu * nu
    sign = -1j if kind == 2 else 1j
    term = 1.0 + 0j
    total = term
    k = 0
    prev = math.inf
    while True:
        k += 1
        term = term * sign * (four_nu2 - (2 * k - 1) ** 2) / (k * 8.0 * z)
        size = abs(term)
        if size == 0.0 or size <= EPS * abs(total):
            total += term
            break
        if size >= prev:
            break
        total += term
        prev = size
    phase = z - 0.5 * nu * math.pi - 0.25 * math.pi
    carrier = complex(math.cos(phase), -math.sin(phase) if kind == 2 else math.sin(phase))
    return math.sqrt(2.0 / (math.pi * z)) * carrier * total


def bessel_jy(nu: float, z: float) -> BesselJY:
    """J_nu, J_nu', Y_nu, Y_nu' at real z > 0."""
    _check(nu, z)
    if z > ASYMPTOTIC_Z:
        h0 = _hankel_asymptotic(nu, z)
        h1 = _hankel_asymptotic(nu + 1.0, z)
        j0, y0 = h0.real, -h0.imag
        j1, y1 = h1.real, -h1.imag
    else:
        j0, j1 = _j_series(nu, z), _j_series(nu + 1.0, z)
        y0, y1 = _y_pair(nu, z)
    # C'_nu = (nu/z) C_nu - C_{nu+1}
    return BesselJY(j0, nu / z * j0 - j1, y0, nu / z * y0 - y1)


def hankel_h2(chi: float, z: float) -> HankelValue:
    """H^(2)_chi(z) and its z-derivative."""
    b = bessel_jy(chi, z)
    return HankelValue(complex(b.j, -b.y), complex(b.dj, -b.dy))


def hankel_h2_asymptotic(chi_sq: float, z: float) -> HankelValue:
    """Large-z expansion of H^(2) parameterized by chi^2, so heavy fields
    (chi^2 < 0) are covered; for chi^2 < 0 the constant factor exp(i chi pi/2)
    is dropped, which only changes an overall normalization-preserving phase
    convention. The derivative is differentiated term by term."""
    if not z > 0:
        raise DomainError(f"argument must be positive, got {z}")
    four_nu2 = 4.0 * chi_sq
    chi_phase = 0.5 * math.sqrt(chi_sq) * math.pi if chi_sq > 0 else 0.0
    total = 1.0 + 0j
    dtotal = 0j  # d/dz of the series
    term = 1.0 + 0j
    k = 0
    prev = math.inf
    while True:
        k += 1
        term = term * -1j * (four_nu2 - (2 * k - 1) ** 2) / (k * 8.0 * z)
        size = abs(term)
        if size >= prev:
            break
        total += term
        dtotal += -k * term / z
        prev = size
        if size == 0.0 or size <= EPS * abs(total):
            break
    phase = z - chi_phase - 0.25 * math.pi
    carrier = complex(math.cos(phase), -math.sin(phase))
    amp = math.sqrt(2.0 / (math.pi * z))
    value = amp * carrier * total
    # d/dz [z^{-1/2} e^{-iz} S(z)]
    deriv = amp * carrier * (dtotal + (-0.5 / z - 1j) * total)
    return HankelValue(value, deriv)

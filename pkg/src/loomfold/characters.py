"""Truncated formal power series in e^{-alpha_i} and the character products.

A series is a map from exponent vectors m (the monomial e^{-sum m_i alpha_i})
to integer coefficients, truncated at plain height sum(m_i) <= degree.
Coefficients are Python ints, so arbitrary precision; no floating point
enters this module.  Each geometric factor (1 - e^{-beta})^{-e} is folded
in via the multiset-coefficient convolution C(k+e-1, e-1) in one pass,
and the accumulation is map-based, so the product is independent of
factor order.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .cartan import AffineData, Vec
from .folding import OrbitMap, _xi_value, bar_inversion_parts, fold_root


class NonIntegerExponent(ValueError):
    """A product-formula exponent xi_s(beta) [beta]_s failed to be an integer."""


class RankMismatch(ValueError):
    """Series over different index sets compared."""


@dataclass(frozen=True)
class CharSeries:
    rank: int                 # finite rank n; exponent tuples have length n+1, slot 0 = 0
    degree: int               # total-height truncation bound
    terms: dict               # exponent tuple -> int coefficient

    def coefficient(self, m: Vec) -> int:
        return self.terms.get(tuple(m), 0)


def one(rank: int, degree: int) -> CharSeries:
    return CharSeries(rank=rank, degree=degree, terms={tuple([0] * (rank + 1)): 1})


def _geometric_mul(terms: dict, beta: Vec, e: int, degree: int) -> dict:
    # multiply by (1 - x^beta)^{-e}: coefficients C(k+e-1, e-1) on x^{k beta}
    hb = sum(beta)
    out: dict = {}
    for m, c in terms.items():
        h = sum(m)
        k = 0
        mm = m
        while h + k * hb <= degree:
            w = c * comb(k + e - 1, e - 1)
            if mm in out:
                out[mm] += w
            else:
                out[mm] = w
            k += 1
            mm = tuple(x + y for x, y in zip(mm, beta))
    return out


def product_from_exponents(exponents, rank: int, degree: int) -> CharSeries:
    """Expand prod (1 - e^{-beta})^{-e} over (beta, e) pairs to the given height."""
    terms = {tuple([0] * (rank + 1)): 1}
    for beta, e in exponents:
        if e < 0:
            raise NonIntegerExponent(f"negative exponent {e} at {beta}")
        if e:
            terms = _geometric_mul(terms, beta, e, degree)
    return CharSeries(rank=rank, degree=degree, terms=terms)


def char_exponents(data: AffineData, s: int) -> list[tuple[Vec, int]]:
    """(beta, e(beta)) over distinct finite parts of Delta_+(t_{-lambda_s}).

    e(beta) = [beta]_s for untwisted types and xi_s(beta) [beta]_s for
    twisted ones; non-integrality would signal a folding bug.
    """
    out = []
    for beta, (mult, fam) in sorted(bar_inversion_parts(data, s).items()):
        if data.type.is_untwisted:
            e = beta[s]
        else:
            ef = _xi_value(data, s, beta, fam) * beta[s]
            if ef.denominator != 1:
                raise NonIntegerExponent(f"xi*[beta]_s = {ef} at {beta} in {data.type}")
            e = int(ef)
        assert e == mult  # exponent equals the delta-shift multiplicity
        out.append((beta, e))
    return out


def char_product(data: AffineData, s: int, degree: int) -> CharSeries:
    """The product formula for ch(L_{s,a}^±) = ch(U_q^-(w_s)), truncated."""
    return product_from_exponents(char_exponents(data, s), data.n, degree)


def fold_series(series: CharSeries, om: OrbitMap, degree: int) -> CharSeries:
    """Apply pi: e^{-alpha_i} -> e^{-alpha_{bar i}} by orbit-summing exponents."""
    if series.degree < degree:
        raise RankMismatch(f"series truncated at {series.degree} < requested {degree}")
    n = om.twisted.n
    out: dict = {}
    for m, c in series.terms.items():
        if sum(m) > degree:
            continue
        fm = fold_root(om, m)
        if fm in out:
            out[fm] += c
        else:
            out[fm] = c
    return CharSeries(rank=n, degree=degree, terms=out)


@dataclass(frozen=True)
class EqualityReport:
    equal: bool
    witness: tuple | None     # (monomial, coeff_a, coeff_b) at minimal height


def series_equal(a: CharSeries, b: CharSeries, degree: int) -> EqualityReport:
    """Exact coefficient comparison up to the given height, with first divergence."""
    if a.rank != b.rank:
        raise RankMismatch(f"rank {a.rank} vs {b.rank}")
    if a.degree < degree or b.degree < degree:
        raise RankMismatch("series not truncated deep enough for the comparison")
    keys = set(a.terms) | set(b.terms)
    worst = None
    for m in sorted(keys, key=lambda m: (sum(m), m)):
        if sum(m) > degree:
            continue
        ca, cb = a.terms.get(m, 0), b.terms.get(m, 0)
        if ca != cb:
            worst = (m, ca, cb)
            break
    return EqualityReport(equal=worst is None, witness=worst)

"""Exact law of the particle count for the lowest disc level (m = 0).

For the weighted Bergman case the count N_r in the centred disc of radius r
is distributed as a sum of independent Bernoulli variables whose success
probabilities are ratios of incomplete to complete beta integrals,

    p_j = (2 nu - 1) (2 nu)_{j-1} / (j-1)! * B_r(j, 2 nu - 1)
        = B_r(j, 2 nu - 1) / B_1(j, 2 nu - 1),        j = 1, 2, ...

This module builds truncated probability profiles with certified geometric
tail bounds, evaluates the probability generating product, the exact
Poisson-binomial pmf, binomial moments through the cycle-type sum, the
variance series, and a reproducible Monte Carlo sampler.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .exceptions import DomainError, TruncationFailure
from .specfun import incomplete_beta, incomplete_beta_ratio, log_pochhammer

__all__ = [
    "BernoulliProfile",
    "CountDistribution",
    "build_profile",
    "generating_function",
    "distribution",
    "binomial_moment",
    "variance_series",
    "sample_counts",
]

# the two analytic forms of p_j must coincide; see build_profile.  Below the
# floor the quadrature form's relative accuracy degrades, so a looser check
# applies to those (numerically irrelevant) deep-tail terms.
_FORM_AGREEMENT_RTOL = 1e-10
_FORM_CHECK_FLOOR = 1e-30
_FORM_TAIL_RTOL = 1e-6
_BURN_IN = 8


@dataclass(frozen=True, eq=False)
class BernoulliProfile:
    """Truncated success probabilities p_1..p_J with a tail bound.

    ``tail_bound`` dominates sum_{j > J} p_j via the geometric envelope
    established at truncation time.  ``probabilities`` is index-aligned so
    that probabilities[j - 1] == p_j.  Treat instances as immutable.
    """

    nu: float
    r: float
    probabilities: np.ndarray
    tail_bound: float

    @property
    def truncation(self) -> int:
        return len(self.probabilities)


@dataclass(frozen=True, eq=False)
class CountDistribution:
    """Poisson-binomial law of the count over {0, ..., J}.

    ``mean`` and ``variance`` are the series values sum p_j and
    sum p_j (1 - p_j); they agree with the pmf moments up to truncation.
    """

    pmf: np.ndarray
    mean: float
    variance: float


def _success_probability_forms(nu: float, r: float, j: int):
    """p_j by the rising-factorial form and by the beta-ratio form.

    The rising-factorial form multiplies the quadrature value of the
    incomplete beta integral by (2 nu - 1) (2 nu)_{j-1} / (j-1)! assembled
    in log scale; the ratio form goes through the regularized incomplete
    beta function.  They are mathematically identical because
    B_1(j, 2 nu - 1) = Gamma(j) Gamma(2 nu - 1) / Gamma(j + 2 nu - 1).
    """
    b = 2.0 * nu - 1.0
    log_prefactor = math.log(b) + log_pochhammer(2.0 * nu, j - 1) - math.lgamma(j)
    poch_form = math.exp(log_prefactor) * incomplete_beta(r, j, b)
    ratio_form = incomplete_beta_ratio(r, j, b)
    return poch_form, ratio_form


def build_profile(nu: float, r: float, epsilon: float = 1e-12,
                  hard_cap: int = 100000) -> BernoulliProfile:
    """Build the truncated Bernoulli profile for parameters (nu, r).

    Truncates at the first index J >= 8 whose empirical ratio p_J / p_{J-1}
    is below the geometric envelope q (q = r^2 + 0.01, lowered to
    (1 + r^2)/2 when that exceeds 1) and whose value makes the geometric
    tail bound p_J q / (1 - q) smaller than epsilon.  Every p_j is computed
    by both analytic forms, which must agree to 1e-10 relative (loosened to
    1e-6 below 1e-30, where the quadrature form runs out of relative
    accuracy).

    Raises :class:`TruncationFailure` if ``hard_cap`` indices do not
    suffice.
    """
    if not nu > 0.5:
        raise DomainError(f"nu must exceed 1/2, got {nu}")
    if not 0.0 < r < 1.0:
        raise DomainError(f"r must lie in (0, 1), got {r}")
    if not epsilon > 0.0:
        raise DomainError(f"epsilon must be positive, got {epsilon}")
    q = min(r * r + 0.01, 0.5 + 0.5 * r * r)   # strictly below 1, above lim p_{j+1}/p_j
    # stopping at p_J below this makes the geometric tail p_J q/(1-q) < epsilon
    p_stop = epsilon * (1.0 - q) / q
    probs = []
    j = 1
    while True:
        poch_form, ratio_form = _success_probability_forms(nu, r, j)
        if ratio_form > 0.0:
            rel = abs(poch_form - ratio_form) / ratio_form
            rtol = (_FORM_AGREEMENT_RTOL if ratio_form > _FORM_CHECK_FLOOR
                    else _FORM_TAIL_RTOL)
            if rel > rtol:
                raise RuntimeError(
                    f"success-probability forms disagree at j={j}: "
                    f"{poch_form!r} vs {ratio_form!r} (rel {rel:.2e})")
        probs.append(ratio_form)
        if j >= _BURN_IN and probs[-1] < p_stop and probs[-1] <= probs[-2] * q:
            break
        if j >= hard_cap:
            raise TruncationFailure(
                f"tail bound {epsilon} not reached within {hard_cap} terms "
                f"(nu={nu}, r={r})")
        j += 1
    tail = probs[-1] * q / (1.0 - q)
    return BernoulliProfile(nu=nu, r=r, probabilities=np.asarray(probs),
                            tail_bound=tail)


def generating_function(profile: BernoulliProfile, s: float) -> float:
    """E (1+s)^{N_r} as the truncated product prod_j (1 + s p_j).

    Valid for |s| < 1 (the range for which the infinite product is
    certified); evaluated as exp(sum log1p(s p_j)) for stability.
    """
    if not -1.0 < s < 1.0:
        raise DomainError(f"s must lie in (-1, 1), got {s}")
    return float(math.exp(np.log1p(s * profile.probabilities).sum()))


def distribution(profile: BernoulliProfile) -> CountDistribution:
    """Exact Poisson-binomial pmf of the count over {0, ..., J}.

    Sequential convolution of the J Bernoulli factors; the mean and
    variance fields carry sum p_j and sum p_j (1 - p_j).
    """
    pmf = np.array([1.0])
    for p in profile.probabilities:
        nxt = np.zeros(len(pmf) + 1)
        nxt[:-1] = pmf * (1.0 - p)
        nxt[1:] += pmf * p
        pmf = nxt
    p = profile.probabilities
    return CountDistribution(pmf=pmf, mean=float(p.sum()),
                             variance=float((p * (1.0 - p)).sum()))


def _partitions(k: int):
    """Integer partitions of k as non-increasing tuples."""
    def gen(rest, largest):
        if rest == 0:
            yield ()
            return
        for part in range(min(rest, largest), 0, -1):
            for tail in gen(rest - part, part):
                yield (part,) + tail
    return gen(k, k)


def binomial_moment(profile: BernoulliProfile, k: int) -> float:
    """k-th binomial moment E C(N_r, k) of the count.

    Cycle-type reduction of the permutation sum: with power sums
    S_l = sum_j p_j^l,

        E C(N_r, k) = sum over partitions (l_1, ..., l_p) of k of
                      prod_i (-1)^{l_i + 1} S_{l_i} / z,

    where z = prod_c c^{m_c} m_c! counts the permutations of each cycle
    type.  Capped at k <= 8 (the partition count stays tiny; the cap guards
    against float cancellation across alternating terms, not cost).
    """
    if k < 1 or k != int(k) or k > 8:
        raise DomainError(f"k must be an integer in [1, 8], got {k}")
    k = int(k)
    p = profile.probabilities
    power_sums = {l: float((p ** l).sum()) for l in range(1, k + 1)}
    total = 0.0
    for lam in _partitions(k):
        mult: dict[int, int] = {}
        for part in lam:
            mult[part] = mult.get(part, 0) + 1
        z = 1.0
        for part, count in mult.items():
            z *= part ** count * math.factorial(count)
        term = 1.0
        for part in lam:
            term *= -power_sums[part] if part % 2 == 0 else power_sums[part]
        total += term / z
    return total


def variance_series(nu: float, r: float, epsilon: float = 1e-12) -> float:
    """Var(N_r) = sum p_j - sum p_j^2 over the truncated profile.

    The neglected tail is below the profile's tail bound (each tail term
    p_j (1 - p_j) <= p_j).
    """
    profile = build_profile(nu, r, epsilon)
    p = profile.probabilities
    return float(p.sum() - (p ** 2).sum())


def sample_counts(profile: BernoulliProfile, seed: int, n_samples: int,
                  chunk: int = 20000) -> np.ndarray:
    """Histogram of ``n_samples`` independent draws of the count.

    Driven by the counter-based Philox generator keyed by ``seed``; draw i
    consumes the uniforms [i*J, (i+1)*J) of the stream, so results are
    bit-identical across runs, chunk sizes and platforms, and a parallel
    driver can reproduce any draw by jumping the counter.  Returns integer
    counts over {0, ..., J}.
    """
    if n_samples < 1:
        raise DomainError(f"n_samples must be >= 1, got {n_samples}")
    p = profile.probabilities
    J = len(p)
    rng = np.random.Generator(np.random.Philox(np.random.SeedSequence(int(seed))))
    hist = np.zeros(J + 1, dtype=np.int64)
    done = 0
    while done < n_samples:
        take = min(chunk, n_samples - done)
        uniforms = rng.random((take, J))
        counts = (uniforms < p).sum(axis=1)
        hist += np.bincount(counts, minlength=J + 1)
        done += take
    return hist

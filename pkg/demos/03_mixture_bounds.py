"""Entropy bounds for finite skew-t mixtures, with their caveat.

Builds the bundled one dimensional mixtures, evaluates the Shannon and
Renyi bound combinators, and compares them against the Monte Carlo
oracle. The comparison makes the important caveat visible: the Renyi
combinators only see location-free per-component quantities, so once
component locations separate, the true mixture entropy far exceeds the
upper one (and a small residual excess can remain even co-located, where
component densities of different scales cross). The lower combinator and
the exact-convention Shannon bounds hold throughout.

Run:  python demos/03_mixture_bounds.py
"""

import numpy as np

from skewtmix import (
    MixtureParams,
    SkewTParams,
    SpdMatrix,
    mc_renyi,
    mc_shannon,
    mixture_logpdf,
    renyi_bounds,
    sample_mixture,
    shannon_bounds,
)
from skewtmix.tables import mixture_d1

N = 200_000
SEED = 20240601

mix = mixture_d1(2)
logpdf = lambda x: mixture_logpdf(mix, x)  # noqa: E731
sampler = lambda n, s: sample_mixture(mix, n, s)  # noqa: E731

print("== two-component mixture, Shannon ==")
paper_style = shannon_bounds(mix, convention="paper")
exact_style = shannon_bounds(mix, convention="exact")
oracle = mc_shannon(logpdf, sampler, N, SEED)
print(f"reference-style bounds: [{paper_style.lower:.4f}, {paper_style.upper:.4f}]")
print(f"exact-style bounds    : [{exact_style.lower:.4f}, {exact_style.upper:.4f}]")
print(f"Monte Carlo oracle    : {oracle.value:.4f} +- {oracle.std_error:.4f}")
print("the exact-style interval contains the oracle;",
      "the reference-style upper ignores location spread and sits right at it")

print("\n== the same mixture, Renyi order 2 ==")
report = renyi_bounds(mix, 2)
oracle2 = mc_renyi(logpdf, sampler, 2.0, N, SEED)
print(f"combinator interval: [{report.lower:.4f}, {report.upper:.4f}] midpoint {report.approx:.4f}")
print(f"Monte Carlo oracle : {oracle2.value:.4f} +- {oracle2.std_error:.4f}")
print("the oracle exceeds the upper combinator by ~0.33: the combinators")
print("cannot see the location spread that drives the mixture's entropy")

print("\n== co-located variant: move every component to the origin ==")
print("most of the excess disappears; a few thousandths remain because")
print("the component densities still cross (different scales and shapes)")
centered = MixtureParams(
    components=tuple(
        SkewTParams(mu=np.zeros(1), scale=c.scale, delta=c.delta, dof=c.dof)
        for c in mix.components
    ),
    weights=mix.weights,
)
report_c = renyi_bounds(centered, 2)
oracle_c = mc_renyi(
    lambda x: mixture_logpdf(centered, x), lambda n, s: sample_mixture(centered, n, s),
    2.0, N, SEED,
)
excess = oracle_c.value - report_c.upper
print(f"combinator interval: [{report_c.lower:.4f}, {report_c.upper:.4f}]")
print(f"Monte Carlo oracle : {oracle_c.value:.4f} +- {oracle_c.std_error:.4f}  excess over upper: {excess:+.4f}")

print("\n== bound widths across orders (m = 3) ==")
mix3 = mixture_d1(3)
for alpha in (2, 3, 5, 10, 20, 30):
    r = renyi_bounds(mix3, alpha)
    print(f"alpha={alpha:2d}: [{r.lower:.4f}, {r.upper:.4f}] half-width {r.half_width:.4f}")

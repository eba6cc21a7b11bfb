#!/usr/bin/env python3
"""Q(w) by quadrature against the closed form, and the first exact q_n."""
from bombieri.variation import LINEAR, Q_closed, Q_numeric, leung_qn, q_series_coefficients, sigma_ratio_bound

print(f"{'w':>6} {'Q closed':>22} {'quadrature - closed':>20}")
for w in (-0.2, -0.1, 0.1, 0.5, 1, 2, 5, 10):
    c = Q_closed(w)
    print(f"{w:>6} {c:>22.17g} {Q_numeric(w, LINEAR) - c:>20.2e}")

print()
print(f"{'n':>3} {'q_n':>12} {'Leung':>12} {'q_n/q_{n+1}':>12} {'bound':>10}")
for n, q in zip(range(2, 12), q_series_coefficients(11)):
    ratio, bound, _ = sigma_ratio_bound(n + 1, n)
    print(f"{n:>3} {str(q):>12} {str(leung_qn(n)):>12} {str(ratio):>12} {str(bound):>10}")

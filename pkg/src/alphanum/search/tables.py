"""Claimed rows of the published reference tables this package audits.

Values here are transcribed exactly as printed at the source, including any
printing errors; the audit recomputes every cell and flags disagreements, it
never corrects the data in place.

Table ids:
  divisor-sums       per-n divisor-sum columns (exact and floating)
  strong-examples    sample strong hits of order (1,1)
  weak-examples      sample weak hits of order (1,1)
  even-strong        even strong hits of order (1,1) below 10**5
  generator-caps     admissible generator prime powers for the odd search
  prime-power-sigma  factored divisor sums of the prime powers the search uses
  seed-sets          seed families grown from each generator
  seed-viability     viability verdicts for the grown seeds
"""

from __future__ import annotations

AUDIT_BOUND = 10**5

# (n, tau, sigma1, sigma2, sigma05, (si_re, si_im), floor05, floor_i)
DIVISOR_SUM_ROWS: list[tuple] = [
    (1, 1, 1, 1, 1.0, (1.0, 0.0), 1, 1),
    (2, 2, 3, 5, 2.4142, (1.7692, 0.6390), 2, 1),
    (3, 2, 4, 10, 2.7321, (1.4548, 0.8906), 2, 1),
    (4, 3, 7, 21, 4.4142, (1.9527, 1.6220), 4, 2),
    (5, 2, 6, 26, 3.2361, (0.9614, 0.9993), 3, 1),
    (6, 4, 12, 50, 6.5959, (2.0049, 2.5052), 6, 3),
    (7, 2, 8, 50, 3.6458, (0.6336, 0.9305), 3, 1),
    (8, 4, 15, 85, 7.2426, (1.466, 2.4954), 7, 2),
    (9, 3, 13, 91, 5.7321, (0.8686, 1.7007), 5, 1),
    (10, 4, 18, 130, 7.8126, (1.0624, 2.3822), 7, 2),
    (24, 8, 60, 850, 19.787, (-0.0899, 4.936), 19, 4),
    (25, 3, 31, 651, 8.236, (-0.0356, 0.922), 8, 0),
    (26, 4, 42, 850, 11.118, (-0.0623, 1.068), 11, 1),
    (27, 4, 40, 820, 10.928, (-0.1200, 1.547), 10, 1),
    (28, 6, 56, 1050, 16.03, (-0.2719, 2.845), 16, 2),
    (29, 2, 30, 842, 6.385, (0.0025, -0.224), 6, 0),
    (30, 8, 72, 1300, 21.344, (-0.5759, 4.412), 21, 4),
]

# (n, factorization, sigma, alpha1, alpha2, omega)
STRONG_EXAMPLE_ROWS = [
    (6, "2*3", 12, 2, 1, 2),
    (28, "2^2*7", 56, 2, 1, 2),
    (523776, "2^9*3*11*31", 1571328, 3, 1, 4),
    (707840, "2^8*5*7*79", 1962240, 3, 1, 4),
]

# (n, factorization, sigma, alpha1, alpha2, omega, tau)
WEAK_EXAMPLE_ROWS = [
    (24, "2^3*3", 60, 5, 2, 2, 8),
    (11172, "2^2*3*7^2*19", 31920, 20, 7, 4, 36),
    (544635, "3^2*5*7^2*13*19", 1244860, 16, 7, 5, 72),
    (931095, "3^4*5*11^2*19", 1931160, 56, 27, 4, 60),
    (6517665, "3^4*5*7*11^2*19", 15449280, 64, 27, 5, 120),
]

# (n, factorization, sigma, alpha1, alpha2, omega)
EVEN_STRONG_ROWS = [
    (6, "2*3", 12, 2, 1, 2),
    (28, "2^2*7", 56, 2, 1, 2),
    (120, "2^3*3*5", 360, 3, 1, 3),
    (496, "2^4*31", 992, 2, 1, 2),
    (672, "2^5*3*7", 2016, 3, 1, 3),
    (1090, "2^3*3*5*7*13", 40320, 4, 1, 5),
    (8128, "2^6*127", 16256, 2, 1, 2),
    (30240, "2^5*3^3*5*7", 120960, 4, 1, 4),
    (32760, "2^3*3^2*13*7*5", 131040, 4, 1, 5),
]

# (p_star, lambda_star, omega_cap)
GENERATOR_CAP_ROWS = [
    (3, 7, 3),
    (5, 4, 3),
    (7, 3, 3),
    (11, 2, 3),
    (13, 2, 3),
]

# (prime, exponent, printed factorization of sigma(prime**exponent))
PRIME_POWER_SIGMA_ROWS = [
    (3, 7, "2^4*541"),
    (3, 6, "1093"),
    (3, 5, "2^2*7*13"),
    (3, 4, "11^2"),
    (3, 3, "2^3*5"),
    (3, 2, "13"),
    (5, 5, "3^3*7*31"),
    (5, 4, "11*71"),
    (5, 3, "2^2*3*13"),
    (5, 2, "31"),
    (7, 4, "2801"),
    (7, 3, "2^4*5^2"),
    (7, 2, "3*19"),
    (11, 2, "7*19"),
    (13, 3, "2*5*7*17"),
    (13, 2, "3*61"),
    (19, 2, "3*127"),
    (31, 2, "3*331"),
]

# ((p_star, lambda_star), seed factorization strings)
SEED_SET_ROWS: list[tuple[tuple[int, int], list[str]]] = [
    ((3, 7), []),
    ((3, 6), []),
    ((3, 5), ["3^5*7*13"]),
    ((3, 4), []),
    ((3, 3), ["3^3*5", "3^3*5^2", "3^3*5^3", "3^3*5^4", "3^3*5^5"]),
    ((3, 2), ["3^2*13*7", "3^2*13*7^2", "3^2*13*7^3", "3^2*13^2*7", "3^2*13^2*7^2"]),
    ((5, 4), []),
    ((5, 3), ["5^3*13*7", "5^3*13*7^2"]),
    ((5, 2), ["5^2*31", "5^2*31^2"]),
    ((7, 3), []),
    ((7, 2), []),
    ((11, 2), []),
    ((13, 2), []),
]

# (seed factorization, p_star, claimed chi, claimed "n-bar exceeds the bound")
# The last field is None where the source left the cell blank (no claim made).
SEED_VIABILITY_ROWS: list[tuple[str, int, int, bool | None]] = [
    ("3^5*7*13", 3, 0, None),
    ("3^3*5", 3, 0, None),
    ("3^3*5^2", 3, 0, None),
    ("3^3*5^3", 3, 0, None),
    ("3^3*5^4", 3, 0, True),
    ("3^3*5^5", 3, 0, True),
    ("3^2*13*7", 3, 0, None),
    ("3^2*13*7^2", 3, 0, None),
    ("3^2*13*7^3", 3, 0, True),
    ("3^2*13^2*7", 3, 0, True),
    ("3^2*13^2*7^2", 3, 0, True),
    ("5^3*13*7", 5, 0, None),
    ("5^3*13*7^2", 5, 0, True),
    ("5^2*31", 5, 0, None),
    ("5^2*31^2", 5, 0, True),
]

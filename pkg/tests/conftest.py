import itertools
from math import gcd

import numpy as np
from sympy import GF
from sympy.polys.matrices import DomainMatrix


def gf_matrix(A, p):
    A = np.asarray(A, dtype=np.int64) % p
    K = GF(p)
    rows = [[K(int(v)) for v in row] for row in A]
    return DomainMatrix(rows, A.shape, K)


def gf_rank(A, p) -> int:
    A = np.asarray(A)
    if A.size == 0:
        return 0
    return gf_matrix(A, p).rank()


def sweep_configs(primes=(3, 5, 7), rs=range(2, 9)):
    """Every (p, r, I0) with gcd(p, r) = 1 and I0 a proper nonempty subset of Z_r."""
    for p in primes:
        for r in rs:
            if gcd(p, r) != 1:
                continue
            for k in range(1, r):
                for I0 in itertools.combinations(range(r), k):
                    yield p, r, I0


# acceptance lines collected by tests/test_acceptance.py, echoed after the run
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)

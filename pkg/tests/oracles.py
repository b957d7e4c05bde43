"""Independent brute-force oracles used to cross-check the library.

The divisibility oracle decides whether a quotient exists by solving a
dense linear system for the quotient coefficients with Gaussian
elimination over Fraction. It shares no code with the elimination-based
`exact_divide` it is checking.
"""

import itertools
from fractions import Fraction

from polydegen.laurent import LaurentPoly
from polydegen.multipoly import MultiPoly


def _t_range(poly):
    exps = [e for _, coeff in poly.laurent_terms() for e, _ in coeff.items()]
    return min(exps), max(exps)


def _flat_terms(poly):
    for powers, coeff in poly.laurent_terms():
        for t_exp, c in coeff.items():
            yield powers + (t_exp,), c


def solve_linear(rows, rhs):
    """Solve A*x = rhs over Fraction. Returns a solution list or None."""
    m = [list(row) + [b] for row, b in zip(rows, rhs)]
    n_rows = len(m)
    n_cols = len(rows[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(n_cols):
        pivot = next((i for i in range(r, n_rows) if m[i][c] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = Fraction(1) / m[r][c]
        m[r] = [v * inv for v in m[r]]
        for i in range(n_rows):
            if i != r and m[i][c] != 0:
                factor = m[i][c]
                m[i] = [a - factor * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == n_rows:
            break
    for i in range(r, n_rows):
        if m[i][-1] != 0:
            return None
    solution = [Fraction(0)] * n_cols
    for row, col in enumerate(pivots):
        solution[col] = m[row][-1]
    return solution


def divide_by_linear_system(dividend, divisor):
    """Quotient of dividend by divisor, or None, found by linear algebra.

    Enumerates every monomial the quotient could contain (per-variable
    degrees and the t-window are both additive over products, so the
    bounds are exact) and solves for its coefficients.
    """
    if divisor.is_zero():
        raise ZeroDivisionError("divisor is zero")
    if dividend.is_zero():
        return MultiPoly.zero(dividend.arity)
    arity = dividend.arity
    var_bounds = []
    for i in range(1, arity + 1):
        bound = dividend.degree_in(i) - divisor.degree_in(i)
        if bound < 0:
            return None
        var_bounds.append(bound)
    n_lo, n_hi = _t_range(dividend)
    d_lo, d_hi = _t_range(divisor)
    t_lo, t_hi = n_lo - d_lo, n_hi - d_hi
    if t_lo > t_hi:
        return None
    total_bound = dividend.total_degree() - divisor.total_degree()

    candidates = [
        powers + (t_exp,)
        for powers in itertools.product(*(range(b + 1) for b in var_bounds))
        if sum(powers) <= total_bound
        for t_exp in range(t_lo, t_hi + 1)
    ]

    divisor_terms = list(_flat_terms(divisor))
    columns = []
    support = set()
    for key in candidates:
        col = {}
        for d_key, d_coeff in divisor_terms:
            prod = tuple(a + b for a, b in zip(key, d_key))
            col[prod] = col.get(prod, Fraction(0)) + d_coeff
        columns.append(col)
        support.update(col)
    target = dict(_flat_terms(dividend))
    support.update(target)
    ordered = sorted(support)
    rows = [[col.get(key, Fraction(0)) for col in columns] for key in ordered]
    rhs = [target.get(key, Fraction(0)) for key in ordered]
    solution = solve_linear(rows, rhs)
    if solution is None:
        return None
    quotient = MultiPoly.zero(arity)
    for key, value in zip(candidates, solution):
        if value:
            coeff = LaurentPoly.t_power(key[-1], value)
            quotient = quotient + MultiPoly.monomial(arity, key[:-1], coeff)
    return quotient

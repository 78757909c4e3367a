"""Rooted-tree derivation calculus behind the codes.

Repeatedly "deriving" the one-node tree (grafting a new leaf onto every vertex
of every term) produces a series of plane rooted trees whose integer
coefficients sum to (n-1)!.  Replacing each tree by the product of its vertex
arities V_a turns the series into a polynomial x_n, and that polynomial is
exactly the generating function of permutation codes: each sigma in S_{n-1}
contributes the monomial of its code's evaluation.  Setting V_0 = 1 collapses
x_{n+1} to a polynomial C_n whose factor-count statistic is the Eulerian
distribution of descents.
"""

import math

from permcodes import (
    c_polynomial,
    code_arity_monomial,
    connes_moscovici,
    inv_code,
    iter_permutations,
    s_code,
    taylor_tree_series,
    tree_to_perm,
    tree_to_text,
    x_polynomial,
)
from permcodes.codes import format_code
from permcodes.permutations import format_permutation
from permcodes.polynomials import IndexPolynomial, format_q_polynomial
from permcodes.trees import format_v_polynomial, increasing_labelings


def main() -> None:
    n = 5
    series = taylor_tree_series(n)
    print(f'tree series term {n} ({len(series)} shapes, coefficients sum to'
          f' {sum(series.values())} = {n - 1}!):')
    for tree, coeff in sorted(series.items(), key=lambda kv: tree_to_text(kv[0])):
        print(f'  {coeff:2d} * {tree_to_text(tree)}')
    print()

    print(f'x_{n} = {format_v_polynomial(x_polynomial(n))}')
    by_scode = IndexPolynomial.zero()
    by_invcode = IndexPolynomial.zero()
    for p in iter_permutations(n - 1):
        by_scode = by_scode + code_arity_monomial(s_code(p))
        by_invcode = by_invcode + code_arity_monomial(inv_code(p))
    assert by_scode == x_polynomial(n) == by_invcode
    print(f'  == sum of code monomials over S_{n - 1},'
          ' via saillance codes and via inverse codes')
    print()

    # Increasing labelings of one shape list the permutations it stands for.
    tree = ((), (((), ()),))
    print(f'increasing labelings of {tree_to_text(tree)} (6 vertices):')
    for labeled in increasing_labelings(tree):
        p = tree_to_perm(labeled)
        print(f'  {format_permutation(p)}  Sc = {format_code(s_code(p))}')
    assert len(increasing_labelings(tree)) == connes_moscovici(tree)
    print('  count equals the coefficient of the shape in the series')
    print()

    for m in range(7):
        counts = c_polynomial(m).q_by_factor_count()
        print(f'C_{m}|factor-count = {format_q_polynomial(counts)}')
        assert sum(counts.values()) == math.factorial(m)
    print('  (the Eulerian polynomials: coefficient of q^k counts'
          ' permutations with k-1 descents)')


if __name__ == '__main__':
    main()

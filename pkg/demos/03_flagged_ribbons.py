"""Flagged ribbon generating functions.

A composition I of n selects a "flag": each code position i gets an alphabet
of variables x_0 .. x_{m_i} whose size shrinks as the flag descends.  Complete
homogeneous slices h_k over those alphabets multiply to h^I, and inclusion-
exclusion over coarsenings of I carves out the ribbon r_I.  The punchline:
r_I is the generating function of sorted codes over the descent class D_I of
inverses, so its monomial mass is |D_I| and its monomials are exactly the
sorted codes.  A Jacobi-Trudi style determinant gives the same polynomial by a
different route.
"""

from permcodes import (
    compositions_of,
    descent_class,
    format_bracket,
    h_product,
    inverse,
    ribbon_determinant,
    ribbon_flagged,
    ribbon_table_lines,
)
from permcodes.permutations import coarser_compositions, format_composition
from permcodes.polynomials import IndexPolynomial
from permcodes.ribbons import alphabet_flag, h_flagged


def main() -> None:
    comp = (2, 2)
    print(f'I = {format_composition(comp)}, flag alphabet sizes = {alphabet_flag(comp)}')
    print(f'h_2 over x_0..x_2 = {format_bracket(h_flagged(2, 2))}')
    print(f'h^I  = {format_bracket(h_product(comp))}')
    print(f'r_I  = {format_bracket(ribbon_flagged(comp))}')
    assert ribbon_flagged(comp) == ribbon_determinant(comp)
    print('     == the flagged determinant route')
    print()

    # The monomials of r_I are the sorted codes of inverses of the descent
    # class D_I; in particular the coefficients count that class.
    mass = ribbon_flagged(comp).total_mass()
    klass = descent_class(comp)
    print(f'|D_{format_composition(comp)}| = {len(klass)} = total mass of r_I')
    assert mass == len(klass)
    print('members and inverses:')
    for p in sorted(klass):
        print(f'  {p} -> inverse {inverse(p)}')
    print()

    # Moebius inversion recovers the h-products from the ribbons.
    comp = (1, 2, 1)
    total = IndexPolynomial.zero()
    for coarser in coarser_compositions(comp):
        total = total + ribbon_flagged(coarser)
    assert total == h_product(comp)
    print(f'sum of r_J over coarsenings J of {format_composition(comp)} == h^I')
    print()

    print('all ribbons for n = 4:')
    for line in ribbon_table_lines(4):
        print(line)
    print()
    n = 5
    assert sum(ribbon_flagged(c).total_mass() for c in compositions_of(n)) == 120
    print(f'ribbon masses over all compositions of {n} sum to {n}! = 120')


if __name__ == '__main__':
    main()

"""
Free fields
===========

Normal ordered currents of a βγ system reproduce the level Tr(ρρ), and
the Clifford algebra has one-dimensional HH_0.
"""

from higherkm.currents import sl2_fundamental, free_field_commutator, clifford_hh0

rep = sl2_fundamental()
for m, n in [(1, -1), (2, -2), (2, -1), (0, 0)]:
    c, rest = free_field_commutator(rep, m, n, 0, 2, 6)
    print("[J_%d(e), J_%d(f)] central part %s, non-central discrepancy %s" % (m, n, c, rest or 0))

for n in (1, 2, 3):
    r = clifford_hh0(n)
    print("dim V=%d  HH_0 %d  Berezin(top) %s" % (n, r["dimension"], r["berezin_top"]))

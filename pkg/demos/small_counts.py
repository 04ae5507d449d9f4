"""Generating-pair counts for A5 and A6, and why A5 itself fails."""

from beauville import phi2_bruteforce, phi2_moebius
from beauville.counting import class_representatives
from beauville.structure import a5_obstruction

for n in (5, 6):
    r = phi2_bruteforce(n)
    print(f"A{n}: {r.phi2} generating pairs, |Aut| = {r.aut_order}, d2 = {r.d2}")
print("A5 via the Moebius function:", phi2_moebius(5).d2)

print("A6 triples of type (3,4,5):",
      len(class_representatives(6, (3, 4, 5), ambient="Sn")), "classes under S6,",
      len(class_representatives(6, (3, 4, 5))), "under Aut(A6)")

print("A5 with k = 1:", a5_obstruction())

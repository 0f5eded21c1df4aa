"""
Graph families and their closed-form counts
===========================================

Circular ladders (prisms) have a closed-form number of proper
3-edge-colorings; twisted (Moebius) ladders have a parity-dependent one.
Both are checked here against the algebraic count and the independent
brute-force oracle.
"""

from heawood import (
    circular_ladder,
    cln_formula,
    count_tait_colorings_heawood,
    count_tait_oracle,
    count_zero_sum_sequences,
    mobius_formula,
    mobius_ladder,
    petersen,
)

print("circular ladders CL_n: 2^n + 8 (even n), 2^n - 2 (odd n)")
print(f"{'n':>3} {'algebraic':>10} {'formula':>8} {'oracle':>7}")
for n in range(3, 9):
    algebraic = count_tait_colorings_heawood(circular_ladder(n))
    oracle = count_tait_oracle(circular_ladder(n)) if n <= 6 else None
    print(f"{n:>3} {algebraic:>10} {cln_formula(n):>8} "
          f"{'-' if oracle is None else oracle:>7}")
    assert algebraic == cln_formula(n)

# The count rides on a small sequence lemma: how many +-1 sequences of
# length n sum to 0 mod 3.
print("\nzero-sum sequence counts:",
      [count_zero_sum_sequences(n) for n in range(1, 9)])

# Twisted ladders are handled by the oracle alone (non-planar), and the
# closed form depends on the twist parity: 2^n + 4 for odd n, 2^n + 2
# for even n.
print("\nMoebius ladders M_2n:")
print(f"{'n':>3} {'oracle':>7} {'formula':>8}")
for n in range(3, 7):
    oracle = count_tait_oracle(mobius_ladder(n))
    print(f"{n:>3} {oracle:>7} {mobius_formula(n):>8}")
    assert oracle == mobius_formula(n)

# The Petersen graph is the classic graph with no proper 3-edge-coloring
# at all; the oracle confirms by exhausting every branch.
print("\nPetersen graph colorings:", count_tait_oracle(petersen()))

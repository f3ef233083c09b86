"""The raven paradox, quantitatively.

'All ravens are black' and its contrapositive 'all non-black things are
non-ravens' are logically equivalent, yet observing a black raven and
observing a white shoe should not support the rule equally.  The degree
of confirmation separates the two: the rule and its contrapositive get
different b*, and the marginal value of one more observation of each
kind depends on the current counts.
"""

from semcal import (
    ContingencyTable,
    doc_h1_from_table,
    doc_h2_from_table,
    raven_increments,
)


def main():
    # n11 black ravens, n10 non-black ravens, n01 black non-ravens,
    # n00 non-black non-ravens
    t = ContingencyTable(n11=20, n10=1, n01=30, n00=500)
    rule = doc_h1_from_table(t)
    contrapositive = doc_h2_from_table(t)
    print(f"counts: {t}")
    print(f"  'ravens are black'                  b* = {rule.b_star:.4f}")
    print(f"  'non-black things are non-ravens'   b* = {contrapositive.b_star:.4f}")
    print("  (equivalent sentences, different support)")
    print()

    d11, d00 = raven_increments(t)
    print("marginal value of one more observation:")
    print(f"  another black raven     raises b* by ~{d11:.6f}")
    print(f"  another white shoe      raises b* by ~{d00:.6f}")
    print(f"  ratio raven/shoe = {d11 / d00:.1f}")
    print()

    # with few background objects the shoe can briefly matter more
    small = ContingencyTable(n11=100, n10=10, n01=100, n00=80)
    d11, d00 = raven_increments(small)
    print("when non-black non-ravens are still scarce:")
    print(f"  black raven increment {d11:.6f} < white shoe increment {d00:.6f}")


if __name__ == "__main__":
    main()

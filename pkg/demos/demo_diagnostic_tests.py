"""Confirmation and information carried by a diagnostic test.

A test with sensitivity 0.917 and specificity 0.999 confirms a positive
reading almost completely regardless of how rare the condition is, while
the information a reading carries depends strongly on the base rate.
"""

from semcal import doc_from_test, predicted_probability


def main():
    sensitivity, specificity = 0.917, 0.999

    pos, neg = doc_from_test(sensitivity, specificity)
    print(f"test: sensitivity {sensitivity}, specificity {specificity}")
    print(f"  positive reading: b+* = {pos.b_star:.4f} (prior-free)")
    print(f"  negative reading: b-* = {neg.b_star:.4f} (prior-free)")
    print()

    for base_rate in (0.004, 0.04, 0.4):
        pos_i, neg_i = doc_from_test(
            sensitivity, specificity, prior_positive=base_rate)
        print(f"base rate {base_rate:>6}:")
        print(f"  info of a positive reading = {pos_i.information_bits:7.4f} bits")
        print(f"  info of a negative reading = {neg_i.information_bits:7.4f} bits")
    print()

    # what a positive reading predicts for a high-risk group
    for prior in (0.004, 0.1, 0.5):
        predicted = predicted_probability(prior, pos.b_prime_star)
        print(f"P(infected) = {prior:>5} before the test "
              f"-> {predicted:.4f} after a positive reading")


if __name__ == "__main__":
    main()

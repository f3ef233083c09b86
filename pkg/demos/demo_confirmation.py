"""How strongly does evidence confirm a rule?

Three worked scenarios: a field survey where a call usually means a bird,
a symptom that only weakly indicates a disease, and the classic swan rule
in both a nearly-true and an over-claimed form.  Each run shows the
optimal degree of belief b*, its complement b' (the truth value left for
counterexamples), and the semantic information the softened rule carries.
"""

from semcal import (
    ContingencyTable,
    RateSpec,
    doc_from_rates,
    doc_h1_from_table,
    doc_h2_from_table,
)


def show(title, result):
    print(f"{title}")
    print(f"  b*    = {result.b_star:+.4f}   ({result.case.value})")
    print(f"  b'    = {result.b_prime_star:.4f}")
    if result.information_bits is not None:
        print(f"  info  = {result.information_bits:.4f} bits")
    print()


def main():
    # survey: 83 calls with a bird present, 57 birds without a call,
    # 17 false calls, 686 quiet empty plots
    survey = ContingencyTable(n11=83, n10=57, n01=17, n00=686)
    show("'a call means a bird' from the survey counts",
         doc_h1_from_table(survey))
    show("contrapositive 'no bird means no call' from the same counts",
         doc_h2_from_table(survey))

    # a weak clinical sign: present in 25 of 66 patients, 41 sick without it
    clinic = ContingencyTable(n11=25, n10=16, n01=41, n00=60)
    show("'the sign means disease' (weak evidence)", doc_h1_from_table(clinic))

    # swans: 99% of observed swans are white, against an 80% base rate
    show("'swans are white' where observation nearly agrees",
         doc_from_rates(RateSpec(prior=(0.2, 0.8), posterior=(0.01, 0.99))))

    # over-claimed rule: asserting 99% white when only 95% are
    show("'swans are white' claimed harder than the data supports",
         doc_from_rates(RateSpec(prior=(0.01, 0.99), posterior=(0.05, 0.95))))


if __name__ == "__main__":
    main()

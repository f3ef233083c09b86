"""Confirming and fitting a position estimator.

Two views of a GPS-like device on a circular grid.  First, an accuracy
statement 'half the fixes land within the stated radius' is confirmed
exactly with rational arithmetic.  Second, a deviation model with a
systematic shift, a Gaussian spread, and a long-tail floor is fitted
back from its own confusion matrix by maximizing semantic information.
"""

from fractions import Fraction

from semcal import GpsModel, gps_cep_doc, gps_fit


def main():
    # a claimed radius covering half the fixes, on a ring of 7000 cells
    # of which 7 lie inside the radius
    r = gps_cep_doc(Fraction(1, 2), in_circle_cells=7, total_cells=7000)
    print("accuracy claim 'half the fixes are within the radius':")
    print(f"  b* = {r.b_star} exactly  (~{float(r.b_star):.6f})")
    print()

    # deviation model: shift of 3 cells, spread 6 cells, small uniform floor
    model = GpsModel(grid_size=200, delta_e=3, d=6.0, c=0.001)
    delta_hat, d_hat, b_hat = gps_fit(model.channel_matrix())
    print("fitting the deviation model back from its confusion matrix:")
    print(f"  shift   true 3     fitted {delta_hat:.4f}")
    print(f"  spread  true 6.0   fitted {d_hat:.4f}")
    print(f"  belief  ref  {model.reference_belief:.4f} fitted {b_hat:.4f}")
    print()

    print("heavier long tails erode the fitted belief:")
    for c in (0.0004, 0.001, 0.002, 0.004):
        m = GpsModel(grid_size=200, delta_e=0, d=6.0, c=c)
        _, _, b = gps_fit(m.channel_matrix())
        print(f"  floor c = {c:<7} -> b_hat = {b:.4f}")


if __name__ == "__main__":
    main()

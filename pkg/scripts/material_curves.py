"""Write G_d and J_d curves for the standard transition sets as CSV.

    python3 scripts/material_curves.py --out results/

Files: exp_maxwell.csv, exp_scott_blair.csv (a1 = 1 and a1 = 0, with the
constant-order bounds alongside) and slow_exp_vs_ml.csv (exponential versus
Mittag-Leffler transition at the same rate).
"""

import argparse
import os

import numpy as np

from scarpi_visco import (
    Exponential,
    MittagLefflerTransition,
    constant_order_reference,
    creep_compliance,
    relaxation_modulus,
)

EXP_FAST = Exponential(0.6, 0.8, 2.0)
EXP_SLOW = Exponential(0.4, 0.8, 1.0)
ML_SLOW = MittagLefflerTransition(0.4, 0.8, 1.0, 0.5)


def _write(path, header, columns):
    np.savetxt(path, np.column_stack(columns), delimiter=",", header=header, comments="", fmt="%.12g")
    print(f"wrote {path}")


def material_table(f, a1, model, t):
    g = relaxation_modulus(f, a1, t).values
    j = creep_compliance(f, a1, t).values
    refs = [constant_order_reference(model, q, a, a1, t) for q in ("G", "J") for a in (f.initial, f.limit)]
    return [t, g, j, *refs]


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--out", default="results")
    p.add_argument("--points", type=int, default=200)
    args = p.parse_args(argv)
    os.makedirs(args.out, exist_ok=True)
    t = np.logspace(-3, 3, args.points)

    header = "t,Gd,Jd,Gref_alpha1,Gref_alpha2,Jref_alpha1,Jref_alpha2"
    for a1, model, name in ((1.0, "Maxwell", "exp_maxwell"), (0.0, "ScottBlair", "exp_scott_blair")):
        _write(os.path.join(args.out, f"{name}.csv"), header, material_table(EXP_FAST, a1, model, t))

    g_exp = relaxation_modulus(EXP_SLOW, 1.0, t).values
    g_ml = relaxation_modulus(ML_SLOW, 1.0, t).values
    j_exp = creep_compliance(EXP_SLOW, 1.0, t).values
    j_ml = creep_compliance(ML_SLOW, 1.0, t).values
    _write(
        os.path.join(args.out, "slow_exp_vs_ml.csv"),
        "t,Gd_exp,Gd_ml,Jd_exp,Jd_ml",
        [t, g_exp, g_ml, j_exp, j_ml],
    )


if __name__ == "__main__":
    main()

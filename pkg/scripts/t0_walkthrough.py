"""Walk through the contraction calculus on T0 = span{(e1, e1), (0, e2)}.

T0 is the smallest relation that is neither an operator nor a product:
dom T0 = span{e1}, mul T0 = span{e2}.  Every quantity printed here can be
checked by hand.
"""

import numpy as np

from linrel import contractions as con
from linrel import decompositions as dec
from linrel import run_suite
from linrel.witnesses import t0


def show(name, A):
    print(f"{name} =\n{np.array2string(np.round(A, 12) + 0.0, precision=6, suppress_small=True)}\n")


def main():
    T = t0()
    p = T.parts
    print(f"dims: dom {p.dom.dim}, ran {p.ran.dim}, ker {p.ker.dim}, mul {p.mul.dim}\n")

    F = con.frame(T)
    show("graph basis [P_T; Q_T]", F.basis)
    c = con.products(F)
    for name in ("pp", "pq", "qp", "qq"):
        show(name, getattr(c, name))

    f = dec.resolvent_forms(T)
    show("(I + T*T)^-1", f.res_h)
    show("(I + TT*)^-1", f.res_k)
    show("E_T", con.characteristic_projection(T))

    s = dec.split(T)
    show("T_reg basis", s.regular.basis)
    show("T_sing basis", s.singular.basis)
    show("T* basis", T.adjoint.basis)

    print("P_T† e1 =", np.round(con.mp_apply(T, [1.0, 0.0]), 12) + 0.0)
    print()
    print(run_suite(T, label="T0").to_text())


if __name__ == "__main__":
    main()

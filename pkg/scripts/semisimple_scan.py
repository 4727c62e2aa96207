"""Scan h + t*x for a semisimple witness over several values of q.

x is the second ring generator. Each line reports the degree of the minimal
polynomial and whether it is squarefree.
"""
import argparse
from fractions import Fraction

from horochow.catalog import SpecContext, builtin
from horochow.ringkit import semisimple_certificate


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("variety", nargs="?", default="g2")
    p.add_argument("--q", nargs="*", default=["1", "2", "-1", "1/2"])
    p.add_argument("--t", nargs="*", default=["0", "1", "-1", "1/2", "2"])
    args = p.parse_args()
    ctx = SpecContext(builtin(args.variety))
    ring = ctx.qring
    second = next(g.name for g in ctx.spec.generators if not g.quantum and g.degree > 1)
    for qv in map(Fraction, args.q):
        alg = ring.finite_algebra(qv)
        for t in map(Fraction, args.t):
            elt = ring.gen("h") + ring.gen(second) * t
            cert = semisimple_certificate(alg, alg.vector(elt), f"h + {t}*{second}")
            print(f"q={qv} {cert.element}: degree {cert.degree}/{cert.dimension}, "
                  f"squarefree={cert.squarefree}, semisimple={cert.semisimple}")


if __name__ == "__main__":
    main()

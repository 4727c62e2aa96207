"""Second-generator reconstruction on every builtin diagram.

Prints the solution-space dimension of {M : M(1) = sigma, [M, H] = 0,
M self-adjoint} and whether each sampled solution passes the
a-posteriori associativity check.
"""
import argparse

from horochow.catalog import BUILTINS, builtin, reconstruction


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("varieties", nargs="*", default=list(BUILTINS))
    args = p.parse_args()
    for name in args.varieties:
        spec = builtin(name)
        if "reconstruct" not in spec.golden:
            print(f"{name}: no reconstruction data")
            continue
        res = reconstruction(spec)
        print(f"{name}: {res.summary()}")


if __name__ == "__main__":
    main()

"""Schubert calculus on Grassmannians G(k, n) and on the ten-dimensional spinor variety."""
from dataclasses import dataclass
from fractions import Fraction

from .errors import ContextMismatch, DegreeMismatch, Inhomogeneous
from .symfunc import (
    LinComb,
    Partition,
    StrictPartition,
    lr_product,
    partitions,
    pq_product,
    strict_partitions,
)

SPINOR_MAX_PART = 4
SPINOR_POINT = StrictPartition((4, 3, 2, 1))


@dataclass(frozen=True)
class GrassCtx:
    k: int
    n: int

    def __post_init__(self):
        if not 0 < self.k < self.n:
            raise ValueError(f"need 0 < k < n, got G({self.k},{self.n})")

    @property
    def rows(self):
        return self.k

    @property
    def cols(self):
        return self.n - self.k

    @property
    def dimension(self):
        return self.k * (self.n - self.k)

    @property
    def point(self):
        return Partition((self.cols,) * self.rows)

    def fits(self, lam):
        return Partition(lam).fits(self.rows, self.cols)

    def cycle(self, lam, coeff=1):
        return SchubertCycle({Partition(lam): coeff}, self)

    def special(self, i):
        """sigma_i = c_i of the tautological quotient bundle."""
        return self.cycle((i,)) if i <= self.cols else SchubertCycle({}, self)

    def unit(self):
        return self.cycle(())

    def hyperplane(self):
        return self.special(1)

    def schubert_basis(self, degree=None):
        degs = range(self.dimension + 1) if degree is None else [degree]
        return [lam for d in degs for lam in partitions(d, self.cols, self.rows)]

    def __str__(self):
        return f"G({self.k},{self.n})"


class SchubertCycle(LinComb):
    """Rational combination of Schubert classes sigma_lambda on a Grassmannian."""

    __slots__ = ("ctx",)

    def __init__(self, terms=(), ctx=None):
        if ctx is None:
            raise ValueError("SchubertCycle needs a GrassCtx")
        self.ctx = ctx
        super().__init__(terms)
        for lam in self._terms:
            if not ctx.fits(lam):
                raise ValueError(f"{lam} does not fit the {ctx.rows}x{ctx.cols} box")

    @staticmethod
    def _coerce_key(key):
        return key if isinstance(key, Partition) else Partition(key)

    def _like(self, terms):
        return SchubertCycle(terms, self.ctx)

    def _context(self):
        return self.ctx

    def __add__(self, other):
        if isinstance(other, SchubertCycle) and other.ctx != self.ctx:
            raise ContextMismatch(f"{self.ctx} vs {other.ctx}")
        return super().__add__(other)

    def __mul__(self, other):
        if isinstance(other, SchubertCycle):
            return grass_mult(self, other)
        return super().__mul__(other)

    def __pow__(self, n):
        result = self.ctx.unit()
        for _ in range(n):
            result = grass_mult(result, self)
        return result

    def degrees(self):
        return {lam.weight for lam in self}

    def __str__(self):
        return format_cycle(self, "σ")


def format_cycle(cycle, symbol="σ", dot=""):
    """Render as e.g. ``2σ[4,1] + 2σ[3,2]``."""
    if not cycle:
        return "0"
    out = []
    for key, c in sorted(cycle.items(), key=lambda kv: (-kv[0].weight, tuple(-p for p in kv[0]))):
        name = f"{symbol}[{','.join(map(str, key))}]"
        mag = abs(c)
        coeff = "" if mag == 1 else f"{mag}{dot}"
        sign = "-" if c < 0 else "+"
        out.append((sign, coeff + name))
    text = ("-" if out[0][0] == "-" else "") + out[0][1]
    for sign, body in out[1:]:
        text += f" {sign} {body}"
    return text


def grass_mult(a, b):
    if a.ctx != b.ctx:
        raise ContextMismatch(f"{a.ctx} vs {b.ctx}")
    ctx = a.ctx
    acc = {}
    for lam, c in a.items():
        for mu, d in b.items():
            if lam.weight + mu.weight > ctx.dimension:
                continue
            for nu, e in lr_product(lam, mu).items():
                if ctx.fits(nu):
                    acc[nu] = acc.get(nu, 0) + c * d * e
    return SchubertCycle(acc, ctx)


def _integrate_top(terms, point, top):
    degs = {lam.weight for lam in terms}
    if len(degs) > 1:
        raise Inhomogeneous(f"class has components in degrees {sorted(degs)}")
    if not degs or degs.pop() != top:
        return Fraction(0)
    return terms.coefficient(point)


def grass_integrate(a):
    return _integrate_top(a, a.ctx.point, a.ctx.dimension)


def evaluate_against(fund, alpha):
    """Integral of alpha over a subvariety whose class is ``fund``."""
    if fund.ctx != alpha.ctx:
        raise ContextMismatch(f"{fund.ctx} vs {alpha.ctx}")
    df, da = fund.degrees(), alpha.degrees()
    if len(df) != 1 or len(da) != 1:
        raise DegreeMismatch("both classes must be homogeneous and nonzero")
    if df.pop() + da.pop() != fund.ctx.dimension:
        raise DegreeMismatch(f"degrees do not add up to dim {fund.ctx} = {fund.ctx.dimension}")
    return grass_integrate(grass_mult(fund, alpha))


# --- the spinor variety of Spin(10) -----------------------------------------


class SpinorCycle(LinComb):
    """Combination of Schubert classes gamma_lambda of the spinor variety, lambda in (4,3,2,1)."""

    @staticmethod
    def _coerce_key(key):
        key = key if isinstance(key, StrictPartition) else StrictPartition(key)
        if key and key[0] > SPINOR_MAX_PART:
            raise ValueError(f"{key} has a part larger than {SPINOR_MAX_PART}")
        return key

    def __mul__(self, other):
        if isinstance(other, SpinorCycle):
            return spinor_mult(self, other)
        return super().__mul__(other)

    def __pow__(self, n):
        result = SpinorCycle({(): 1})
        for _ in range(n):
            result = spinor_mult(result, self)
        return result

    def __str__(self):
        return format_cycle(self, "γ", dot="·")


def gamma(lam, coeff=1):
    return SpinorCycle({StrictPartition(lam): coeff})


def spinor_mult(a, b):
    acc = {}
    for lam, c in a.items():
        for mu, d in b.items():
            if lam.weight + mu.weight > SPINOR_POINT.weight:
                continue
            for nu, e in pq_product(lam, mu, "P").items():
                if not nu or nu[0] <= SPINOR_MAX_PART:
                    acc[nu] = acc.get(nu, 0) + c * d * e
    return SpinorCycle(acc)


def spinor_integrate(a):
    return _integrate_top(a, SPINOR_POINT, SPINOR_POINT.weight)


def spinor_basis(degree=None):
    degs = range(SPINOR_POINT.weight + 1) if degree is None else [degree]
    return [lam for d in degs for lam in strict_partitions(d, SPINOR_MAX_PART)]

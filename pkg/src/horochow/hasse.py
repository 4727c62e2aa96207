"""Hasse diagrams: (quantum) Chevalley operators, degrees, Giambelli solving,
dual bases, table verification and the second-generator reconstruction."""
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import (
    DegeneratePairing,
    Inconsistent,
    MixedDegrees,
    UnknownSymbol,
    Underdetermined,
)
from .linalg import nullspace, rank, rref
from .polyexpr import parse_poly
from .report import CheckReport, check
from .symfunc import LinComb

_SUPERSCRIPT = str.maketrans("0123456789", "⁰¹²³⁴⁵⁶⁷⁸⁹")


@dataclass(frozen=True)
class Vertex:
    id: str
    degree: int
    family: str = "shared"  # "Y" | "Z" | "shared"
    label: str = ""

    @property
    def name(self):
        return self.label or self.id


@dataclass(frozen=True)
class Edge:
    source: str
    target: str
    mult: Fraction = Fraction(1)


@dataclass(frozen=True)
class QEdge:
    source: str
    target: str
    coeff: Fraction
    q_power: int


@dataclass
class HasseDiagram:
    vertices: list
    edges: list
    q_edges: list = field(default_factory=list)
    index: int = None  # degree of q

    def __post_init__(self):
        self.by_id = {v.id: v for v in self.vertices}
        if len(self.by_id) != len(self.vertices):
            raise ValueError("duplicate vertex id")
        degs = [v.degree for v in self.vertices]
        self.top = max(degs)
        units = [v for v in self.vertices if v.degree == 0]
        points = [v for v in self.vertices if v.degree == self.top]
        if len(units) != 1 or len(points) != 1:
            raise ValueError("need exactly one vertex in degree 0 and one in top degree")
        self.unit, self.point = units[0].id, points[0].id
        for e in self.edges:
            s, t = self.by_id[e.source], self.by_id[e.target]
            if t.degree != s.degree + 1:
                raise ValueError(f"edge {e.source}->{e.target} does not raise degree by one")
        for e in self.q_edges:
            s, t = self.by_id[e.source], self.by_id[e.target]
            if self.index is None or t.degree + e.q_power * self.index != s.degree + 1:
                raise ValueError(f"q-edge {e.source}->{e.target} has inconsistent degrees")

    def level(self, d):
        return [v.id for v in self.vertices if v.degree == d]

    def degree(self, vid):
        return self.by_id[vid].degree

    def labels(self):
        return {v.id: v.name for v in self.vertices}

    def out_edges(self, vid):
        return [e for e in self.edges if e.source == vid]

    def out_q_edges(self, vid):
        return [e for e in self.q_edges if e.source == vid]


class QComb(LinComb):
    """Combination of q^k * vertex, keyed by (vertex id, k)."""

    def render(self, diag, ascii=False):
        return format_qcomb(self, diag.labels(), diag.unit, ascii=ascii)


def format_qcomb(comb, labels, unit, ascii=False):
    if not comb:
        return "0"
    order = {vid: i for i, vid in enumerate(labels)}

    def key(item):
        (vid, k), _ = item
        return (k, order.get(vid, 0))

    out = []
    for (vid, k), c in sorted(comb.items(), key=key):
        mag = abs(c)
        qpart = "" if k == 0 else ("q" if k == 1 else (f"q^{k}" if ascii else "q" + str(k).translate(_SUPERSCRIPT)))
        vpart = "" if vid == unit else labels.get(vid, vid)
        coeff = "" if mag == 1 and (qpart or vpart) else str(mag)
        body = coeff + qpart
        if vpart:
            body = f"{body}{'*' if ascii else '·'}{vpart}" if qpart else body + vpart
        out.append(("-" if c < 0 else "+", body))
    text = ("-" if out[0][0] == "-" else "") + out[0][1]
    return text + "".join(f" {s} {b}" for s, b in out[1:])


def _as_qcomb(element):
    if isinstance(element, QComb):
        return element
    if isinstance(element, str):
        return QComb({(element, 0): 1})
    return QComb({(k if isinstance(k, tuple) else (k, 0)): v for k, v in element.items()})


def chevalley_apply(diag, element, quantum=True):
    """Multiply by h using the edge data; ``quantum=False`` drops q-edges."""
    comb = _as_qcomb(element)
    index = diag.index or 0
    degs = {diag.degree(v) + k * index for v, k in comb}
    if len(degs) > 1:
        raise MixedDegrees(f"element spans degrees {sorted(degs)}")
    acc = {}
    for (v, k), c in comb.items():
        for e in diag.out_edges(v):
            acc[(e.target, k)] = acc.get((e.target, k), 0) + c * e.mult
        if quantum:
            for e in diag.out_q_edges(v):
                key = (e.target, k + e.q_power)
                acc[key] = acc.get(key, 0) + c * e.coeff
    return QComb(acc)


def chevalley_matrix(diag, d):
    """Classical h-multiplication A^d -> A^(d+1) in the vertex bases (rows = targets)."""
    src, tgt = diag.level(d), diag.level(d + 1)
    m = [[Fraction(0)] * len(src) for _ in tgt]
    ti = {v: i for i, v in enumerate(tgt)}
    for j, v in enumerate(src):
        for e in diag.out_edges(v):
            m[ti[e.target]][j] += e.mult
    return m


def degrees_from_hasse(diag):
    """Weighted path counts from each vertex to the point vertex."""
    out = {}
    for v in diag.vertices:
        comb = QComb({(v.id, 0): 1})
        for _ in range(diag.top - v.degree):
            comb = chevalley_apply(diag, comb, quantum=False)
        out[v.id] = comb.coefficient((diag.point, 0))
    return out


def giambelli_solve(diag, ring, seeds):
    """Images of all vertices in ``ring`` from h-multiplication and the seeds.

    q-edges are used exactly when the ring has a quantum parameter.
    """
    quantum = ring.q_index is not None
    h = ring.gen(diag_h_name(ring))
    images = {}
    for v, elt in seeds.items():
        images[v] = ring.normal_form(elt)
    if diag.unit not in images:
        raise Underdetermined(0, "seeds must contain the unit vertex")
    q = ring.gen(ring.pres.quantum) if quantum else None
    for d in range(diag.top):
        sources = diag.level(d)
        unknown = [w for w in diag.level(d + 1) if w not in images]
        rows, rhs = [], []
        for v in sources:
            if v not in images:
                raise Underdetermined(d, f"vertex {v} has no image")
            target = h * images[v]
            coeffs = [Fraction(0)] * len(unknown)
            for e in diag.out_edges(v):
                if e.target in unknown:
                    coeffs[unknown.index(e.target)] += e.mult
                else:
                    target = target - images[e.target] * e.mult
            if quantum:
                for e in diag.out_q_edges(v):
                    target = target - images[e.target] * (q ** e.q_power) * e.coeff
            rows.append(coeffs)
            rhs.append(ring.coordinates(target, d + 1))
        ncoord = ring.dim(d + 1)
        if unknown and rank(rows) < len(unknown):
            raise Underdetermined(d + 1)
        # solve rows * X = rhs for the matrix X (unknowns x coordinates)
        aug = [list(r) + list(b) for r, b in zip(rows, rhs)]
        red, pivots = rref(aug, len(unknown) + ncoord) if aug else ([], [])
        if any(p >= len(unknown) for p in pivots):
            raise Inconsistent(f"Chevalley data and seeds disagree in degree {d + 1}")
        for row, p in zip(red, pivots):
            images[unknown[p]] = ring.from_coordinates(row[len(unknown):], d + 1)
    # top-degree consistency for the point vertex
    for v in diag.level(diag.top):
        target = h * images[v]
        for e in diag.out_edges(v):
            target = target - images[e.target] * e.mult
        if quantum:
            for e in diag.out_q_edges(v):
                target = target - images[e.target] * (q ** e.q_power) * e.coeff
        if target:
            raise Inconsistent(f"h * {v} does not match its edges")
    return images


def diag_h_name(ring):
    """The hyperplane generator is the first generator of degree one."""
    for name, w in ring.pres.generators:
        if w == 1:
            return name
    raise ValueError("ring has no degree-one generator")


def express(diag, ring, giambelli, elt):
    """Write a ring element as a combination of q^k times vertex images."""
    qdeg = ring.q_degree
    acc = {}
    for d in sorted(elt.degrees()):
        cols, keys = [], []
        k = 0
        while d - k * (qdeg or 0) >= 0:
            for v in diag.level(d - k * (qdeg or 0)):
                img = giambelli[v] if k == 0 else giambelli[v] * ring.gen(ring.pres.quantum) ** k
                cols.append(ring.coordinates(img, d))
                keys.append((v, k))
            if not qdeg:
                break
            k += 1
        target = ring.coordinates(elt, d)
        mat = [list(r) for r in zip(*cols)] if cols else [[] for _ in target]
        aug = [r + [b] for r, b in zip(mat, target)]
        red, pivots = rref(aug, len(keys) + 1) if aug else ([], [])
        if len(keys) in pivots:
            raise Inconsistent(f"element not in the span of vertex classes in degree {d}")
        if len(pivots) < len(keys):
            raise Underdetermined(d, f"vertex classes are dependent in degree {d}")
        for row, p in zip(red, pivots):
            if row[-1]:
                acc[keys[p]] = acc.get(keys[p], 0) + row[-1]
    return QComb(acc)


def _resolve(ring, giambelli, aliases, names):
    env = dict(ring.env())
    env.update(giambelli)
    for a, target in (aliases or {}).items():
        if target in env:
            env[a] = env[target]
    missing = sorted(n for n in names if n not in env)
    if missing:
        raise UnknownSymbol(", ".join(missing))
    return env


def verify_table(diag, ring, giambelli, table, prefix="table", aliases=None, labels=None):
    """Compare each ``lhs`` against ``rhs`` (both expressions) in the ring."""
    exprs = [(parse_poly(t["lhs"]), parse_poly(t["rhs"])) for t in table]
    env = _resolve(ring, giambelli, aliases, set().union(*(a.identifiers() | b.identifiers() for a, b in exprs)) if exprs else set())
    labels = labels or {}
    report = CheckReport()
    for i, (entry, (lhs, rhs)) in enumerate(zip(table, exprs), start=1):
        cid = entry.get("id") or f"{prefix}.{i:02d}"
        summary = f"{lhs.pretty(labels)} = {rhs.pretty(labels)}"
        a = ring.evaluate(lhs, env)
        b = ring.evaluate(rhs, env)
        detail = entry.get("note", "")
        if a != b:
            try:
                found = express(diag, ring, giambelli, a).render(diag)
            except Exception:  # noqa: BLE001 - only for the message
                found = repr(a)
            detail = f"engine gives {found}; coordinates {a!r} vs {b!r}"
        report.append(check(cid, a == b, summary, a, b, detail))
    return report


def dual_images(diag, ring, giambelli, dual_of):
    """Images of dual-basis vertices: ``dual_of[w] = v`` means w is the Poincare dual of v."""
    out = {}
    for d in range(diag.top + 1):
        level = diag.level(d)
        duals = ring.dual_basis([giambelli[v] for v in level], d)
        by_first = dict(zip(level, duals))
        for w, v in dual_of.items():
            if v in by_first:
                out[w] = by_first[v]
    return out


def dual_diagram_check(diag, ring, giambelli, dual_diag, dual_of, formulas, prefix="dual", labels=None):
    """Dual-basis formulas, the reversed diagram, and the involution property."""
    report = CheckReport()
    labels = dict(labels or {})
    labels.update(dual_diag.labels())
    images = dual_images(diag, ring, giambelli, dual_of)
    for i, (w, text) in enumerate(formulas.items(), start=1):
        expr = parse_poly(text)
        expected = ring.evaluate(expr, _resolve(ring, giambelli, None, expr.identifiers()))
        ok = images.get(w) == expected
        detail = "" if ok else f"dual basis gives {express(diag, ring, giambelli, images[w]).render(diag)}"
        report.append(check(f"{prefix}.formula.{w}", ok, f"{labels.get(w, w)} = {expr.pretty(labels)}", images.get(w), expected, detail))
    # h-multiplication in the dual basis against the reversed diagram
    h = ring.gen(diag_h_name(ring))
    mismatches = []
    for v in dual_diag.vertices:
        if v.degree == dual_diag.top:
            continue
        got = express(dual_diag, ring, images, h * images[v.id])
        want = chevalley_apply(dual_diag, v.id, quantum=False)
        if got != want:
            mismatches.append(f"h·{v.name}: engine {got.render(dual_diag)}, diagram {want.render(dual_diag)}")
    report.append(check(f"{prefix}.diagram", not mismatches, "reversed Hasse diagram edges", detail="; ".join(mismatches)))
    # dualizing the dual basis returns the first basis
    back = dual_images(dual_diag, ring, images, {v: w for w, v in dual_of.items()})
    ok = all(back[v] == giambelli[v] for v in giambelli if v in back)
    report.append(check(f"{prefix}.involution", ok and len(back) == len(giambelli), "dual of dual = first basis"))
    return report, images


# --- reconstruction of the second generator --------------------------------


@dataclass
class ReconstructionResult:
    solution_dimension: int
    unknowns: int
    sample: dict  # degree -> matrix
    contains_true: bool
    samples_checked: list  # (label, associative flag)

    def summary(self):
        flags = ", ".join(f"{lab}:{'ok' if ok else 'non-associative'}" for lab, ok in self.samples_checked)
        return (
            f"solution space dimension {self.solution_dimension} "
            f"({self.unknowns} unknowns); contains_true={'yes' if self.contains_true else 'no'}; samples {flags}"
        )


def ring_pairing(diag, ring, giambelli):
    """Pairing matrices in the vertex bases: P[d][i][j] = integral(v_i * w_j)."""
    return {
        d: [[ring.integrate(giambelli[v] * giambelli[w]) for w in diag.level(diag.top - d)] for v in diag.level(d)]
        for d in range(diag.top + 1)
    }


def ring_operator(diag, ring, giambelli, elt, shift):
    """Matrices of multiplication by ``elt`` (degree ``shift``) in the vertex bases."""
    out = {}
    for d in range(diag.top + 1 - shift):
        cols = [
            [express(diag, ring, giambelli, giambelli[v] * elt).coefficient((w, 0)) for w in diag.level(d + shift)]
            for v in diag.level(d)
        ]
        out[d] = [list(r) for r in zip(*cols)] if cols else []
    return out


def reconstruct_second_generator(diag, pairing, sigma_vertex, true_operator=None, max_samples=3):
    """Solve for operators M with M(1) = sigma, [M, H] = 0 and M self-adjoint."""
    top = diag.top
    s = diag.degree(sigma_vertex)
    for d, mat in pairing.items():
        if not mat or rank(mat) < len(mat):
            raise DegeneratePairing(f"pairing singular in degree {d}")
    # unknown layout: M_d is (dim d+s) x (dim d), row-major
    slots = {}
    n = 0
    for d in range(top + 1 - s):
        rows, cols = len(diag.level(d + s)), len(diag.level(d))
        slots[d] = (n, rows, cols)
        n += rows * cols

    def var(d, i, j):
        base, _, cols = slots[d]
        return base + i * cols + j

    eqs, rhs = [], []

    def add(coeffs, value=Fraction(0)):
        row = [Fraction(0)] * n
        for k, c in coeffs:
            row[k] += c
        if any(row) or value:
            eqs.append(row)
            rhs.append(Fraction(value))

    # seed: M(unit) = sigma
    for i, w in enumerate(diag.level(s)):
        add([(var(0, i, 0), 1)], 1 if w == sigma_vertex else 0)
    # commutation: M_{d+1} H_d = H_{d+s} M_d
    for d in range(top - s):
        H_d, H_ds = chevalley_matrix(diag, d), chevalley_matrix(diag, d + s)
        _, rows, cols = slots[d]
        for i in range(len(diag.level(d + s + 1))):
            for j in range(cols):
                coeffs = []
                for k in range(len(diag.level(d + 1))):
                    coeffs.append((var(d + 1, i, k), H_d[k][j]))
                for k in range(rows):
                    coeffs.append((var(d, k, j), -H_ds[i][k]))
                add(coeffs)
    # self-adjointness: <M_d x, y> = <x, M_e y> with e = top - d - s
    for d in range(top + 1 - s):
        e = top - d - s
        P_ds, P_d = pairing[d + s], pairing[d]
        for a in range(len(diag.level(d))):
            for b in range(len(diag.level(e))):
                coeffs = []
                for k in range(len(diag.level(d + s))):
                    coeffs.append((var(d, k, a), P_ds[k][b]))
                for k in range(len(diag.level(e + s))):
                    coeffs.append((var(e, k, b), -P_d[a][k]))
                add(coeffs)

    aug = [r + [c] for r, c in zip(eqs, rhs)]
    red, pivots = rref(aug, n + 1)
    if n in pivots:
        raise DegeneratePairing("constraints are inconsistent")
    particular = [Fraction(0)] * n
    for row, p in zip(red, pivots):
        particular[p] = row[n]
    kernel = nullspace([r[:n] for r in eqs], n)

    def unpack(x):
        out = {}
        for d, (base, rows, cols) in slots.items():
            out[d] = [[x[base + i * cols + j] for j in range(cols)] for i in range(rows)]
        return out

    contains_true = False
    if true_operator is not None:
        flat = [Fraction(0)] * n
        for d, (base, rows, cols) in slots.items():
            for i in range(rows):
                for j in range(cols):
                    flat[base + i * cols + j] = Fraction(true_operator[d][i][j])
        contains_true = all(sum((a * x for a, x in zip(r, flat)), Fraction(0)) == c for r, c in zip(eqs, rhs))

    samples = [("particular", particular)]
    for t, k in enumerate(kernel[: max_samples - 1], start=1):
        samples.append((f"particular+k{t}", [a + b for a, b in zip(particular, k)]))
    checked = [(label, operators_associative(diag, unpack(x), s)) for label, x in samples]
    return ReconstructionResult(len(kernel), n, unpack(particular), contains_true, checked)


def operators_associative(diag, M, s):
    """Whether H and M generate a well-defined commutative algebra structure.

    Every polynomial relation f(H, M) * 1 = 0 must hold as an operator identity,
    and the monomials H^i M^j applied to 1 must span each degree.
    """
    top = diag.top
    dims = [len(diag.level(d)) for d in range(top + 1)]
    H = {d: chevalley_matrix(diag, d) for d in range(top)}

    def apply(word, d, vec):
        # word: sequence of "H"/"M", applied right to left
        for op in reversed(word):
            if op == "H":
                if d >= top:
                    return None, d + 1
                vec = [sum((H[d][i][j] * vec[j] for j in range(dims[d])), Fraction(0)) for i in range(dims[d + 1])]
                d += 1
            else:
                if d + s > top:
                    return None, d + s
                vec = [sum((M[d][i][j] * vec[j] for j in range(dims[d])), Fraction(0)) for i in range(dims[d + s])]
                d += s
        return vec, d

    for d in range(top + 1):
        words = [("M",) * j + ("H",) * (d - s * j) for j in range(d // s + 1)]
        vecs = [apply(w, 0, [Fraction(1)])[0] for w in words]
        if rank(vecs) < dims[d]:
            return False
        for rel in nullspace([list(r) for r in zip(*vecs)], len(words)):
            for d0 in range(top + 1 - d):
                for j in range(dims[d0]):
                    basis = [Fraction(int(i == j)) for i in range(dims[d0])]
                    total = [Fraction(0)] * dims[d0 + d] if d0 + d <= top else []
                    for c, w in zip(rel, words):
                        if not c:
                            continue
                        img, _ = apply(w, d0, basis)
                        if img is None:
                            continue
                        total = [a + c * b for a, b in zip(total, img)]
                    if any(total):
                        return False
    return True


__all__ = [
    "Edge",
    "HasseDiagram",
    "QComb",
    "QEdge",
    "ReconstructionResult",
    "Vertex",
    "chevalley_apply",
    "chevalley_matrix",
    "degrees_from_hasse",
    "dual_diagram_check",
    "dual_images",
    "express",
    "format_qcomb",
    "giambelli_solve",
    "operators_associative",
    "reconstruct_second_generator",
    "ring_operator",
    "ring_pairing",
    "verify_table",
]

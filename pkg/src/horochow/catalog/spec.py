"""Variety spec documents: schema, validation, canonical serialization, builtins."""
import json
import os
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from pathlib import Path

import jsonschema

from ..errors import InvariantViolation, PolySyntaxError, SchemaError, UnknownIdentifier, UnknownVariety
from ..hasse import Edge, HasseDiagram, QEdge, Vertex
from ..polyexpr import parse_poly
from ..ringkit import RingPresentation

BUILTINS = ("g2", "spin7")
SPEC_DIR_ENV = "HOROCHOW_SPEC_DIR"

# the five families of two-orbit varieties (G, P_Y, P_Z); Z is the Aut(X)-fixed orbit
CLASSIFICATION = (
    {"family": "B_m", "triple": ["B_m", "P(w_{m-1})", "P(w_m)"], "condition": "m >= 3", "catalog": None},
    {"family": "B_3", "triple": ["B_3", "P(w_1)", "P(w_3)"], "condition": "", "catalog": "spin7"},
    {"family": "C_m", "triple": ["C_m", "P(w_{i+1})", "P(w_i)"], "condition": "m >= 2, 1 <= i <= m-1", "catalog": None},
    {"family": "F_4", "triple": ["F_4", "P(w_2)", "P(w_3)"], "condition": "", "catalog": None},
    {"family": "G_2", "triple": ["G_2", "P(w_2)", "P(w_1)"], "condition": "", "catalog": "g2"},
)

_RATIONAL = {"type": "string", "pattern": r"^-?\d+(/\d+)?$"}
_DIAGRAM = {
    "type": "object",
    "required": ["vertices", "edges"],
    "properties": {
        "vertices": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["id", "degree", "family"],
                "properties": {
                    "id": {"type": "string"},
                    "degree": {"type": "integer", "minimum": 0},
                    "family": {"enum": ["Y", "Z", "shared"]},
                    "label": {"type": "string"},
                },
                "additionalProperties": False,
            },
        },
        "edges": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["from", "to", "mult"],
                "properties": {"from": {"type": "string"}, "to": {"type": "string"}, "mult": _RATIONAL},
                "additionalProperties": False,
            },
        },
        "q_edges": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["from", "to", "coeff", "q_power"],
                "properties": {
                    "from": {"type": "string"},
                    "to": {"type": "string"},
                    "coeff": _RATIONAL,
                    "q_power": {"type": "integer", "minimum": 1},
                },
                "additionalProperties": False,
            },
        },
    },
    "additionalProperties": False,
}
SCHEMA = {
    "type": "object",
    "required": [
        "name", "group", "dimension", "index", "generators", "relations",
        "normalization", "hasse", "seeds", "golden", "metadata",
    ],
    "properties": {
        "name": {"type": "string"},
        "group": {"type": "string"},
        "dimension": {"type": "integer", "minimum": 1},
        "index": {"type": "integer", "minimum": 1},
        "generators": {
            "type": "array",
            "minItems": 1,
            "items": {
                "type": "object",
                "required": ["name", "degree"],
                "properties": {
                    "name": {"type": "string", "pattern": r"^[A-Za-z][A-Za-z0-9_]*$"},
                    "degree": {"type": "integer", "minimum": 1},
                    "label": {"type": "string"},
                    "quantum": {"type": "boolean"},
                },
                "additionalProperties": False,
            },
        },
        "relations": {
            "type": "object",
            "required": ["classical"],
            "properties": {
                "classical": {"type": "array", "items": {"type": "string"}},
                "quantum": {"type": "array", "items": {"type": "string"}},
            },
            "additionalProperties": False,
        },
        "normalization": {
            "type": "object",
            "required": ["generator", "exponent", "value"],
            "properties": {
                "generator": {"type": "string"},
                "exponent": {"type": "integer", "minimum": 1},
                "value": _RATIONAL,
            },
            "additionalProperties": False,
        },
        "hasse": _DIAGRAM,
        "dual_hasse": _DIAGRAM,
        "seeds": {"type": "object", "additionalProperties": {"type": "string"}},
        "golden": {"type": "object"},
        "metadata": {"type": "object"},
    },
    "additionalProperties": False,
}


@dataclass(frozen=True)
class Generator:
    name: str
    degree: int
    label: str = ""
    quantum: bool = False


@dataclass
class VarietySpec:
    name: str
    group: str
    dimension: int
    index: int
    generators: tuple
    classical_relations: tuple
    quantum_relations: tuple
    normalization: tuple  # (generator, exponent, Fraction)
    hasse: HasseDiagram
    dual_hasse: HasseDiagram
    seeds: dict
    golden: dict
    metadata: dict = field(default_factory=dict)

    @property
    def quantum_generator(self):
        return next((g for g in self.generators if g.quantum), None)

    def presentation(self, quantum=False):
        gens = [g for g in self.generators if not g.quantum]
        rels = self.classical_relations
        q = None
        if quantum:
            qg = self.quantum_generator
            if qg is None:
                raise InvariantViolation("quantum_generator_present", f"{self.name} has no quantum parameter")
            gens = gens + [qg]
            rels = self.quantum_relations
            q = qg.name
        return RingPresentation(
            tuple((g.name, g.degree) for g in gens), tuple(rels), self.dimension, self.normalization, q
        )

    def generator_names(self, quantum=False):
        return [g.name for g in self.generators if quantum or not g.quantum]

    def labels(self):
        out = {g.name: g.label or g.name for g in self.generators}
        for diag in (self.hasse, self.dual_hasse):
            if diag is not None:
                out.update(diag.labels())
        out.update(self.golden.get("alias_labels", {}))
        return out

    def symbols(self):
        """Every identifier a golden expression may use."""
        names = set(self.labels())
        names.update(self.golden.get("aliases", {}))
        return names


def _frac(text):
    return Fraction(text)


def _frac_str(x):
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _diagram(doc, index):
    vertices = [Vertex(v["id"], v["degree"], v["family"], v.get("label", "")) for v in doc["vertices"]]
    edges = [Edge(e["from"], e["to"], _frac(e["mult"])) for e in doc["edges"]]
    q_edges = [QEdge(e["from"], e["to"], _frac(e["coeff"]), e["q_power"]) for e in doc.get("q_edges", [])]
    ids = {v.id for v in vertices}
    for e in list(edges) + list(q_edges):
        if e.source not in ids or e.target not in ids:
            raise InvariantViolation("edges_reference_vertices", f"{e.source}->{e.target}")
    try:
        return HasseDiagram(vertices, edges, q_edges, index)
    except ValueError as exc:
        raise InvariantViolation("diagram_degrees", str(exc)) from None


def _diagram_doc(diag, with_q=True):
    doc = {
        "vertices": [
            {"id": v.id, "degree": v.degree, "family": v.family, **({"label": v.label} if v.label else {})}
            for v in diag.vertices
        ],
        "edges": [{"from": e.source, "to": e.target, "mult": _frac_str(e.mult)} for e in diag.edges],
    }
    if with_q and diag.q_edges:
        doc["q_edges"] = [
            {"from": e.source, "to": e.target, "coeff": _frac_str(e.coeff), "q_power": e.q_power}
            for e in diag.q_edges
        ]
    return doc


def _golden_expressions(golden):
    """(where, text) for every expression stored in the golden tables."""
    out = []
    for key, text in golden.get("giambelli", {}).items():
        out.append((f"giambelli.{key}", text))
    for key, text in golden.get("quantum_giambelli", {}).items():
        out.append((f"quantum_giambelli.{key}", text))
    for group in ("tables", "quantum_tables"):
        for name, rows in golden.get(group, {}).items():
            for i, row in enumerate(rows):
                out.append((f"{group}.{name}[{i}].lhs", row["lhs"]))
                out.append((f"{group}.{name}[{i}].rhs", row["rhs"]))
    for i, row in enumerate(golden.get("quantum_chevalley", [])):
        out.append((f"quantum_chevalley[{i}].vertex", row["vertex"]))
        out.append((f"quantum_chevalley[{i}].rhs", row["rhs"]))
    for i, row in enumerate(golden.get("identities", [])):
        out.append((f"identities[{i}].lhs", row["lhs"]))
        out.append((f"identities[{i}].rhs", row["rhs"]))
    dual = golden.get("dual_basis", {})
    for key, text in dual.get("formulas", {}).items():
        out.append((f"dual_basis.formulas.{key}", text))
    for key, text in dual.get("dual_of", {}).items():
        out.append((f"dual_basis.dual_of.{key}", key))
        out.append((f"dual_basis.dual_of.{key}", text))
    return out


def load_spec(document):
    """Validate a parsed JSON document (or a JSON string) and build a VarietySpec."""
    if isinstance(document, (str, bytes)):
        try:
            document = json.loads(document)
        except json.JSONDecodeError as exc:
            raise SchemaError(f"invalid JSON: {exc}") from None
    try:
        jsonschema.validate(document, SCHEMA)
    except jsonschema.ValidationError as exc:
        where = "/".join(map(str, exc.absolute_path)) or "<root>"
        raise SchemaError(f"{where}: {exc.message}") from None

    gens = tuple(
        Generator(g["name"], g["degree"], g.get("label", ""), g.get("quantum", False))
        for g in document["generators"]
    )
    names = [g.name for g in gens]
    if len(set(names)) != len(names):
        raise InvariantViolation("unique_generators")
    quantum = [g for g in gens if g.quantum]
    if len(quantum) > 1:
        raise InvariantViolation("single_quantum_parameter")
    if quantum and quantum[0].degree != document["index"]:
        raise InvariantViolation(
            "q_degree_equals_index", f"q has degree {quantum[0].degree}, index is {document['index']}"
        )
    rels = document["relations"]
    classical, qrels = tuple(rels["classical"]), tuple(rels.get("quantum", []))
    if qrels and not quantum:
        raise InvariantViolation("quantum_generator_present", "quantum relations without a quantum parameter")
    classical_names = [g.name for g in gens if not g.quantum]
    for text in classical:
        _parse(text, classical_names, "relations.classical")
    for text in qrels:
        _parse(text, names, "relations.quantum")

    norm = document["normalization"]
    if norm["generator"] not in classical_names:
        raise InvariantViolation("normalization_generator", norm["generator"])
    ndeg = norm["exponent"] * next(g.degree for g in gens if g.name == norm["generator"])
    if ndeg != document["dimension"]:
        raise InvariantViolation("normalization_degree", f"degree {ndeg}, dimension {document['dimension']}")

    index = quantum[0].degree if quantum else None
    hasse = _diagram(document["hasse"], index)
    dual = _diagram(document["dual_hasse"], index) if "dual_hasse" in document else None
    if hasse.top != document["dimension"]:
        raise InvariantViolation("diagram_top_equals_dimension", f"top {hasse.top}")

    weights = {g.name: g.degree for g in gens}
    seeds = dict(document["seeds"])
    for vid, text in seeds.items():
        if vid not in hasse.by_id:
            raise InvariantViolation("seeds_reference_vertices", vid)
        expr = _parse(text, classical_names, f"seeds.{vid}")
        degs = expr.to_poly(classical_names).weighted_degrees([weights[n] for n in classical_names])
        if degs - {hasse.degree(vid)}:
            raise InvariantViolation("seed_degrees", f"{vid} has degree {hasse.degree(vid)}, seed {text}")

    spec = VarietySpec(
        name=document["name"],
        group=document["group"],
        dimension=document["dimension"],
        index=document["index"],
        generators=gens,
        classical_relations=classical,
        quantum_relations=qrels,
        normalization=(norm["generator"], norm["exponent"], _frac(norm["value"])),
        hasse=hasse,
        dual_hasse=dual,
        seeds=seeds,
        golden=document["golden"],
        metadata=document["metadata"],
    )
    golden = spec.golden
    if "hilbert" in golden:
        counts = [len(hasse.level(d)) for d in range(hasse.top + 1)]
        if counts != golden["hilbert"]:
            raise InvariantViolation("hilbert_matches_diagram", f"diagram levels {counts}, golden {golden['hilbert']}")
    symbols = spec.symbols()
    for where, text in _golden_expressions(golden):
        expr = _parse(text, None, where)
        dangling = expr.identifiers() - symbols
        if dangling:
            raise InvariantViolation("golden_symbols_resolve", f"{where}: {sorted(dangling)}")
    for vid in golden.get("degrees", {}):
        if vid not in hasse.by_id:
            raise InvariantViolation("golden_symbols_resolve", f"degrees.{vid}")
    return spec


def _parse(text, names, where):
    try:
        return parse_poly(text, names)
    except (PolySyntaxError, UnknownIdentifier) as exc:
        raise SchemaError(f"{where}: {exc}") from None


def to_document(spec):
    doc = {
        "name": spec.name,
        "group": spec.group,
        "dimension": spec.dimension,
        "index": spec.index,
        "generators": [
            {
                "name": g.name,
                "degree": g.degree,
                **({"label": g.label} if g.label else {}),
                **({"quantum": True} if g.quantum else {}),
            }
            for g in spec.generators
        ],
        "relations": {"classical": list(spec.classical_relations)},
        "normalization": {
            "generator": spec.normalization[0],
            "exponent": spec.normalization[1],
            "value": _frac_str(spec.normalization[2]),
        },
        "hasse": _diagram_doc(spec.hasse),
    }
    if spec.quantum_relations:
        doc["relations"]["quantum"] = list(spec.quantum_relations)
    if spec.dual_hasse is not None:
        doc["dual_hasse"] = _diagram_doc(spec.dual_hasse, with_q=False)
    doc["seeds"] = dict(spec.seeds)
    doc["golden"] = spec.golden
    doc["metadata"] = spec.metadata
    return doc


def serialize(spec):
    """Canonical text: two-space JSON, UTF-8 symbols kept, trailing newline."""
    return json.dumps(to_document(spec), indent=2, ensure_ascii=False) + "\n"


def builtin_text(name):
    if name not in BUILTINS:
        raise UnknownVariety(f"unknown variety {name!r}")
    return resources.files("horochow").joinpath("data", f"{name}.json").read_text(encoding="utf-8")


def builtin(name):
    return load_spec(builtin_text(name))


def resolve(name_or_path):
    """Builtin name, path to a JSON file, or a name found in $HOROCHOW_SPEC_DIR."""
    if name_or_path in BUILTINS:
        return builtin(name_or_path)
    path = Path(name_or_path)
    if path.suffix == ".json" and path.is_file():
        return load_spec(path.read_text(encoding="utf-8"))
    spec_dir = os.environ.get(SPEC_DIR_ENV)
    if spec_dir:
        candidate = Path(spec_dir) / f"{name_or_path}.json"
        if candidate.is_file():
            return load_spec(candidate.read_text(encoding="utf-8"))
    raise UnknownVariety(f"unknown variety {name_or_path!r}")


def available():
    names = list(BUILTINS)
    spec_dir = os.environ.get(SPEC_DIR_ENV)
    if spec_dir and Path(spec_dir).is_dir():
        names += sorted(p.stem for p in Path(spec_dir).glob("*.json") if p.stem not in BUILTINS)
    return names

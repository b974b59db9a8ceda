"""JSON documents of named groupoids, spans and actions."""

import json
import logging
from pathlib import Path
from typing import Any, Callable, TypeVar

from src.config.settings import settings
from src.exceptions import DocumentError, GroupoidError
from src.models import (
    DocumentModel,
    FiniteGroup,
    FiniteGroupoid,
    GroupAction,
    GroupoidMap,
    ParityGroupoid,
    PSpan,
    Sign,
    check_atomic_ids,
)
from src.services.group_service import catalog_group, sign_parity, validate_group
from src.services.groupoid_service import (
    classifying_groupoid,
    codiscrete,
    discrete,
    validate_action,
    validate_groupoid,
    with_parity,
)
from src.services.generator import generate
from src.services.span_service import validate_span

logger = logging.getLogger(__name__)

SECTIONS = ("groupoids", "spans", "actions", "generated")

T = TypeVar("T")


# ========== Parsing ==========

def _check_ids(ids: Any, what: str, where: str) -> None:
    try:
        check_atomic_ids(ids, what)
    except GroupoidError as exc:
        raise DocumentError(f"{where}: {exc}") from None


def _sign(value: Any, where: str) -> Sign:
    try:
        return Sign.of(value)
    except (TypeError, ValueError):
        raise DocumentError(f"{where}: parity must be +1 or -1, got {value!r}") from None


def _parse_group(spec: dict, where: str) -> FiniteGroup:
    if "catalog" in spec:
        try:
            return catalog_group(spec["catalog"])
        except ValueError as exc:
            raise DocumentError(f"{where}: {exc}") from None
    try:
        elements = tuple(spec["elements"])
        table = {(g, h): gh for g, h, gh in spec["table"]}
    except (KeyError, TypeError, ValueError):
        raise DocumentError(f"{where}: group needs 'catalog' or 'elements' and 'table'") from None
    _check_ids(elements, "group element", where)
    group = FiniteGroup(spec.get("name", where), elements, table)
    report = validate_group(group)
    if not report.ok:
        raise DocumentError(f"{where}: " + "; ".join(report.violations))
    return group


def _group_parity(group: FiniteGroup, spec: Any, where: str) -> dict[str, Sign]:
    if spec is None or spec == "trivial":
        return {g: Sign.PLUS for g in group.elements}
    if spec == "sign":
        if group.permutation_degree is None:
            raise DocumentError(f"{where}: 'sign' parity needs a symmetric group")
        return sign_parity(group)
    if not isinstance(spec, dict):
        raise DocumentError(f"{where}: parity must be 'trivial', 'sign' or an element -> ±1 map")
    return {g: _sign(spec.get(g, 1), where) for g in group.elements}


def _parse_explicit(spec: dict, where: str) -> ParityGroupoid:
    try:
        objects = list(spec["objects"])
        morphisms = {mid: (src, tgt) for mid, src, tgt in spec.get("morphisms", [])}
        listed = [tuple(c) for c in spec.get("composition", [])]
    except (KeyError, TypeError, ValueError):
        raise DocumentError(
            f"{where}: groupoid needs 'objects', 'morphisms' [id, src, tgt] and 'composition' [f, g, g∘f]"
        ) from None
    _check_ids(objects, "object", where)
    identities = dict(spec.get("identities", {}))
    for x in objects:
        identities.setdefault(x, f"id_{x}")
        morphisms.setdefault(identities[x], (x, x))
    _check_ids(morphisms, "morphism", where)
    composition = {}
    for entry in listed:
        if len(entry) != 3:
            raise DocumentError(f"{where}: composition entry {list(entry)} is not [f, g, g∘f]")
        f, g, h = entry
        composition[(g, f)] = h
    ident_ids = set(identities.values())
    for mid, (src, tgt) in morphisms.items():
        if src in identities:
            composition.setdefault((mid, identities[src]), mid)
        if tgt in identities:
            composition.setdefault((identities[tgt], mid), mid)
        if mid in ident_ids:
            composition.setdefault((mid, mid), mid)
    # inverses that cannot be found are left out and reported by the validator
    inverses = {}
    for f, (src, tgt) in morphisms.items():
        for g, ends in morphisms.items():
            if ends == (tgt, src) and composition.get((g, f)) == identities.get(src) \
                    and composition.get((f, g)) == identities.get(tgt):
                inverses[f] = g
                break
    parity = {m: _sign(v, where) for m, v in spec.get("parity", {}).items()}
    base = FiniteGroupoid(tuple(sorted(set(objects))), morphisms, identities, composition, inverses)
    return with_parity(base, parity)


def _parse_groupoid(spec: Any, where: str) -> ParityGroupoid:
    if not isinstance(spec, dict):
        raise DocumentError(f"{where}: groupoid must be an object")
    if "discrete" in spec:
        g = discrete(spec["discrete"])
    elif "codiscrete" in spec:
        orientation = {x: _sign(v, where) for x, v in spec.get("orientation", {}).items()}
        g = codiscrete(spec["codiscrete"], orientation)
    elif "group" in spec:
        group = _parse_group(spec["group"], where)
        g = classifying_groupoid(group, _group_parity(group, spec.get("parity"), where), spec.get("object", "*"))
    else:
        g = _parse_explicit(spec, where)
    report = validate_groupoid(g, f"groupoid '{where}'")
    if not report.ok:
        raise DocumentError("; ".join(report.violations) + f" (in {where})")
    return g


def _parse_map(spec: Any, apex: FiniteGroupoid, foot: ParityGroupoid, where: str) -> GroupoidMap:
    if not isinstance(spec, dict):
        raise DocumentError(f"{where}: map must be an object with 'objects' and 'morphisms'")
    objects = dict(spec.get("objects", {}))
    morphisms = dict(spec.get("morphisms", {}))
    for m in apex.objects:
        if m not in objects:
            raise DocumentError(f"{where}: apex object {m} has no image")
        if objects[m] not in foot.objects:
            raise DocumentError(f"{where}: image {objects[m]} of {m} is not in the foot")
        morphisms.setdefault(apex.identity(m), foot.identity(objects[m]))
    return GroupoidMap(objects, morphisms)


def _resolve_foot(name: Any, model: DocumentModel, where: str) -> ParityGroupoid:
    if isinstance(name, str):
        if name not in model.groupoids:
            raise DocumentError(f"{where}: unknown groupoid '{name}'")
        return model.groupoids[name]
    return _parse_groupoid(name, where)


def _parse_span(spec: Any, model: DocumentModel, where: str) -> PSpan:
    if not isinstance(spec, dict):
        raise DocumentError(f"{where}: span must be an object")
    try:
        left = _resolve_foot(spec["left"], model, f"{where}.left")
        right = _resolve_foot(spec["right"], model, f"{where}.right")
        apex = _resolve_foot(spec["apex"], model, f"{where}.apex").underlying
    except KeyError as exc:
        raise DocumentError(f"{where}: span needs {exc}") from None
    left_map = _parse_map(spec.get("left_map", {}), apex, left, f"{where}.left_map")
    right_map = _parse_map(spec.get("right_map", {}), apex, right, f"{where}.right_map")
    rho_spec = spec.get("rho", {})
    if not isinstance(rho_spec, dict):
        raise DocumentError(f"{where}: rho must be an object of apex object -> ±1")
    rho = {m: _sign(rho_spec.get(m, 1), where) for m in apex.objects}
    span = PSpan(left, right, apex, left_map, right_map, rho)
    report = validate_span(span)
    if not report.ok:
        raise DocumentError(f"span '{where}': " + "; ".join(report.violations))
    return span


def _parse_action(spec: Any, model: DocumentModel, where: str) -> GroupAction:
    if not isinstance(spec, dict) or "group" not in spec or "target" not in spec:
        raise DocumentError(f"{where}: action needs 'group' and 'target'")
    group = _parse_group(spec["group"], where)
    target = _resolve_foot(spec["target"], model, f"{where}.target")
    on_objects = {(x, g): y for x, g, y in spec.get("objects", [])}
    on_morphisms = {(a, g): b for a, g, b in spec.get("morphisms", [])}
    theta = {(g, x): _sign(s, where) for g, x, s in spec.get("theta", [])}
    for x in target.objects:
        on_objects.setdefault((x, group.identity), x)
    for a in target.morphisms:
        on_morphisms.setdefault((a, group.identity), a)
    for x in target.objects:
        for g in group.elements:
            theta.setdefault((g, x), Sign.PLUS)
            if (x, g) in on_objects:
                on_morphisms.setdefault((target.identity(x), g), target.identity(on_objects[(x, g)]))
    action = GroupAction(group, target, on_objects, on_morphisms, theta)
    report = validate_action(action)
    if not report.ok:
        raise DocumentError(f"action '{where}': " + "; ".join(report.violations))
    return action


def _parse_generated(name: str, params: Any) -> PSpan | ParityGroupoid:
    if not isinstance(params, dict):
        raise DocumentError(f"generated '{name}': entry must be an object with 'kind' and 'seed'")
    params = dict(params)
    kind = params.pop("kind")
    seed = params.pop("seed")
    return generate(kind, seed, **params)


def _guarded(kind: str, name: str, build: Callable[[], T]) -> T:
    """Run one entry's parser; malformed shapes become DocumentError naming the entry."""
    try:
        return build()
    except DocumentError:
        raise
    except (KeyError, TypeError, ValueError, AttributeError) as exc:
        raise DocumentError(f"{kind} '{name}': malformed entry ({exc})") from None


def parse_text(text: str) -> DocumentModel:
    """Parse and validate a document.

    Raises:
        DocumentError: On JSON syntax errors (with line/column) or when any
            entry fails its validator
    """
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(exc.msg, exc.lineno, exc.colno) from None
    if not isinstance(raw, dict):
        raise DocumentError("document must be a JSON object")
    unknown = set(raw) - set(SECTIONS)
    if unknown:
        raise DocumentError(f"unknown section(s): {', '.join(sorted(unknown))}")

    for section in SECTIONS:
        if not isinstance(raw.get(section, {}), dict):
            raise DocumentError(f"section '{section}' must be an object of named entries")

    model = DocumentModel()
    for name, spec in raw.get("groupoids", {}).items():
        model.groupoids[name] = _guarded("groupoid", name, lambda: _parse_groupoid(spec, name))
    for name, spec in raw.get("spans", {}).items():
        model.spans[name] = _guarded("span", name, lambda: _parse_span(spec, model, name))
    for name, spec in raw.get("actions", {}).items():
        model.actions[name] = _guarded("action", name, lambda: _parse_action(spec, model, name))
    for name, params in raw.get("generated", {}).items():
        value = _guarded("generated", name, lambda: _parse_generated(name, params))
        model.generated[name] = dict(params)
        if isinstance(value, PSpan):
            model.spans[name] = value
        else:
            model.groupoids[name] = value
    logger.info("parsed %s", model)
    return model


def parse_document(path: str | Path) -> DocumentModel:
    """Read and parse a document file."""
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise DocumentError(f"cannot read {path}: {exc.strerror}") from None
    return parse_text(text)


# ========== Serialization ==========

def _groupoid_dict(g: ParityGroupoid | FiniteGroupoid) -> dict:
    base = g.underlying if isinstance(g, ParityGroupoid) else g
    out = {
        "objects": list(base.objects),
        "identities": {x: base.identity(x) for x in base.objects},
        "morphisms": [[m, s, t] for m, (s, t) in sorted(base.morphisms.items())],
        "composition": [
            [f, g_, base.compose(g_, f)]
            for f in sorted(base.morphisms)
            for g_ in base.arrows_from(base.target(f))
        ],
    }
    if isinstance(g, ParityGroupoid):
        odd = {m: -1 for m, s in sorted(g.parity.items()) if s.is_odd}
        if odd:
            out["parity"] = odd
    return out


def _foot_ref(g: ParityGroupoid, model: DocumentModel) -> str | dict:
    for name, known in model.groupoids.items():
        if known is g:
            return name
    return _groupoid_dict(g)


def _map_dict(fmap: GroupoidMap) -> dict:
    return {"objects": dict(sorted(fmap.objects.items())), "morphisms": dict(sorted(fmap.morphisms.items()))}


def serialize_document(model: DocumentModel) -> str:
    """Explicit JSON form of a model; parse_text reads it back to the same model."""
    out: dict[str, dict] = {"groupoids": {}, "spans": {}, "actions": {}, "generated": {}}
    generated = set(model.generated)
    for name, g in model.groupoids.items():
        if name not in generated:
            out["groupoids"][name] = _groupoid_dict(g)
    for name, sp in model.spans.items():
        if name in generated:
            continue
        out["spans"][name] = {
            "left": _foot_ref(sp.left_foot, model),
            "right": _foot_ref(sp.right_foot, model),
            "apex": _groupoid_dict(sp.apex),
            "left_map": _map_dict(sp.left_map),
            "right_map": _map_dict(sp.right_map),
            "rho": {m: -1 for m, s in sorted(sp.rho.items()) if s.is_odd},
        }
    for name, action in model.actions.items():
        group = action.group
        out["actions"][name] = {
            "group": {
                "name": group.name,
                "elements": list(group.elements),
                "table": [[g, h, group.multiply(g, h)] for g in group.elements for h in group.elements],
            },
            "target": _foot_ref(action.target, model),
            "objects": [[x, g, y] for (x, g), y in sorted(action.on_objects.items())],
            "morphisms": [[a, g, b] for (a, g), b in sorted(action.on_morphisms.items())],
            "theta": [[g, x, -1] for (g, x), s in sorted(action.theta.items()) if s.is_odd],
        }
    out["generated"] = {name: dict(params) for name, params in model.generated.items()}
    return json.dumps({k: v for k, v in out.items() if v}, indent=2, ensure_ascii=False) + "\n"


class DocumentManager:
    """Loads and saves documents in the fixture directory."""

    def __init__(self, fixture_dir: str | None = None):
        """Initialize document manager.

        Args:
            fixture_dir: Directory of fixture documents (default: from settings)
        """
        self.fixture_dir = Path(fixture_dir or settings.FIXTURE_DIR)

    def path_of(self, name: str) -> Path:
        """Fixture path for a bare name, or the name itself if it is a path."""
        candidate = Path(name)
        if candidate.suffix == ".json" or candidate.exists():
            return candidate
        return self.fixture_dir / f"{name}.json"

    def load(self, name: str) -> DocumentModel:
        """Parse a document by fixture name or path."""
        return parse_document(self.path_of(name))

    def save(self, name: str, model: DocumentModel) -> Path:
        """Write a model as JSON into the fixture directory."""
        path = self.fixture_dir / f"{name}.json"
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(serialize_document(model), encoding="utf-8")
        logger.info("wrote %s", path)
        return path

    def list_documents(self) -> list[str]:
        """Names of the fixture documents."""
        return sorted(p.stem for p in self.fixture_dir.glob("*.json"))

    def resolve(self, reference: str) -> tuple[DocumentModel, str]:
        """Split ``FILE#name``, load FILE and check the name exists.

        Raises:
            DocumentError: If the reference has no ``#name`` part or the
                name is unknown
        """
        if "#" not in reference:
            raise DocumentError(f"reference '{reference}' must look like FILE#name")
        file_part, name = reference.rsplit("#", 1)
        model = self.load(file_part)
        if name not in model.names():
            raise DocumentError(f"'{name}' is not defined in {file_part}")
        return model, name

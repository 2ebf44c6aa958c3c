import json
import logging
import os

from crystal.geometric import CrystalPoint
from crystal.tropical import TropicalPoint
from errors import InvalidNetwork
from moves.grid_moves import MoveSite
from network.grid import Cross, Curl, GridNetwork, Whirl, grid_to_network
from network.surface_network import Edge, Network, Surface, SurfaceKind, Vertex, ensure_valid
from scalars.field_domain import RationalField, SymbolicField

logger = logging.getLogger(__name__)


class DocumentType:
    """Enum for the JSON documents netlab reads and writes"""
    NETWORK = "network"
    GRID = "grid"
    SCRIPT = "script"
    CRYSTAL = "crystal"
    TROPICAL = "tropical"


class FileManager:
    """A class to manage JSON input and output"""
    ENCODING = "utf-8"

    # ------------------------------------------------------------ raw files

    @classmethod
    def load_json(cls, path):
        """
        Read a UTF-8 JSON document.
        :raises ValueError: when the file is missing or not valid JSON
        """
        try:
            with open(path, 'r', encoding=cls.ENCODING) as f:
                return json.load(f)
        except FileNotFoundError as e:
            raise ValueError(f"no such file: {path}") from e
        except json.JSONDecodeError as e:
            raise ValueError(f"{path} is not valid JSON: {e}") from e

    @classmethod
    def save_json(cls, path, document):
        directory = os.path.dirname(path)
        if directory:
            os.makedirs(directory, exist_ok=True)
        with open(path, 'w', encoding=cls.ENCODING) as f:
            f.write(cls.dumps(document))
        logger.debug(f"wrote {path}")

    @staticmethod
    def dumps(document) -> str:
        """Canonical text form: sorted keys, so equal documents give identical bytes"""
        return json.dumps(document, sort_keys=True)

    @classmethod
    def document_type(cls, document) -> str:
        if isinstance(document, list):
            return DocumentType.SCRIPT
        if not isinstance(document, dict):
            raise ValueError("expected a JSON object or a move list")
        if "columns" in document:
            return DocumentType.GRID
        if "vertices" in document:
            return DocumentType.NETWORK
        if "factors" in document:
            return DocumentType.TROPICAL if document.get("tropical") else DocumentType.CRYSTAL
        if "moves" in document:
            return DocumentType.SCRIPT
        raise ValueError("cannot tell what kind of document this is")

    # ------------------------------------------------------------ fields

    @staticmethod
    def field_from_dict(document):
        """"QQ" (the default) or {"vars": [names]} for rational functions"""
        if document is None or document == RationalField.name:
            return RationalField()
        if isinstance(document, dict) and document.get("vars"):
            return SymbolicField(list(document["vars"]))
        raise ValueError(f"unknown field {document!r}")

    @staticmethod
    def field_to_dict(field):
        if isinstance(field, SymbolicField):
            return {"vars": list(field.names)}
        return RationalField.name

    # ------------------------------------------------------------ networks

    @classmethod
    def network_from_dict(cls, document) -> Network:
        if cls.document_type(document) == DocumentType.GRID:
            return grid_to_network(cls.grid_from_dict(document))
        field = cls.field_from_dict(document.get("field"))
        try:
            vertices = []
            for v in document["vertices"]:
                weight = v.get("weight")
                vertices.append(Vertex(
                    id=str(v["id"]),
                    boundary=bool(v.get("boundary", False)),
                    weight=None if weight is None else field.convert(weight),
                    component=int(v.get("component", 0)),
                    position=int(v.get("position", 0)),
                ))
            edges = []
            for e in document["edges"]:
                tail, head = e.get("tail"), e.get("head")
                edges.append(Edge(
                    id=str(e["id"]),
                    tail=None if tail is None else (str(tail[0]), int(tail[1])),
                    head=None if head is None else (str(head[0]), int(head[1])),
                    slices=tuple((int(s), int(sign)) for s, sign in e.get("slices", [])),
                ))
            surface = Surface(document.get("surface", SurfaceKind.DISK))
        except (KeyError, TypeError, IndexError) as e:
            raise ValueError(f"malformed network document: {e!r}") from e
        return ensure_valid(Network(surface, vertices, edges, field))

    @classmethod
    def network_to_dict(cls, net: Network) -> dict:
        field = net.field
        vertices = []
        for v in sorted(net.vertices.values(), key=lambda v: v.id):
            entry = {"id": v.id, "boundary": v.boundary}
            if v.boundary:
                entry.update(component=v.component, position=v.position)
            else:
                entry["weight"] = field.to_string(v.weight)
            vertices.append(entry)
        edges = []
        for e in sorted(net.edges.values(), key=lambda e: e.id):
            edges.append({
                "id": e.id,
                "tail": None if e.tail is None else list(e.tail),
                "head": None if e.head is None else list(e.head),
                "slices": [list(s) for s in e.slices],
            })
        return {"surface": net.surface.kind, "field": cls.field_to_dict(field),
                "vertices": vertices, "edges": edges}

    @classmethod
    def load_network(cls, path) -> Network:
        return cls.network_from_dict(cls.load_json(path))

    # ------------------------------------------------------------ grids

    @classmethod
    def grid_from_dict(cls, document) -> GridNetwork:
        field = cls.field_from_dict(document.get("field"))
        columns = []
        try:
            for column in document["columns"]:
                kind = column["kind"]
                if kind == Cross.kind:
                    columns.append(Cross(int(column["k"]), field.convert(column["a"])))
                elif kind in (Whirl.kind, Curl.kind):
                    x = tuple(field.convert(v) for v in column["x"])
                    columns.append(Whirl(x) if kind == Whirl.kind else Curl(x))
                else:
                    raise ValueError(f"unknown column kind {kind!r}")
            return GridNetwork(int(document["n"]), tuple(columns), field,
                               document.get("surface", SurfaceKind.CYLINDER))
        except (KeyError, TypeError) as e:
            raise ValueError(f"malformed grid document: {e!r}") from e

    @classmethod
    def grid_to_dict(cls, grid: GridNetwork) -> dict:
        field = grid.field
        columns = []
        for column in grid.columns:
            if isinstance(column, Cross):
                columns.append({"kind": Cross.kind, "k": column.k, "a": field.to_string(column.a)})
            else:
                columns.append({"kind": column.kind, "x": [field.to_string(v) for v in column.x]})
        return {"n": grid.n, "surface": grid.surface, "field": cls.field_to_dict(field),
                "columns": columns}

    @classmethod
    def load_grid(cls, path) -> GridNetwork:
        document = cls.load_json(path)
        if cls.document_type(document) != DocumentType.GRID:
            raise InvalidNetwork(f"{path} does not hold a grid")
        return cls.grid_from_dict(document)

    # ------------------------------------------------------------ move scripts

    @staticmethod
    def script_from_list(document):
        if isinstance(document, dict):
            document = document.get("moves", [])
        try:
            return [MoveSite(str(m["kind"]), tuple(m.get("site", ())), dict(m.get("params", {})))
                    for m in document]
        except (KeyError, TypeError) as e:
            raise ValueError(f"malformed move script: {e!r}") from e

    @staticmethod
    def script_to_list(script):
        return [site.to_dict() for site in script]

    @classmethod
    def load_script(cls, path):
        return cls.script_from_list(cls.load_json(path))

    # ------------------------------------------------------------ crystal points

    @classmethod
    def point_from_dict(cls, document) -> CrystalPoint:
        field = cls.field_from_dict(document.get("field"))
        try:
            factors = tuple((f["type"], tuple(field.convert(v) for v in f["x"]))
                            for f in document["factors"])
        except (KeyError, TypeError) as e:
            raise ValueError(f"malformed crystal point: {e!r}") from e
        return CrystalPoint(factors, field)

    @classmethod
    def point_to_dict(cls, point: CrystalPoint) -> dict:
        field = point.field
        return {"field": cls.field_to_dict(field),
                "factors": [{"type": kind, "x": [field.to_string(v) for v in x]}
                            for kind, x in point.factors]}

    @staticmethod
    def tropical_from_dict(document) -> TropicalPoint:
        try:
            return TropicalPoint(tuple((f["type"], tuple(int(v) for v in f["x"]))
                                       for f in document["factors"]))
        except (KeyError, TypeError, ValueError) as e:
            raise ValueError(f"malformed tropical point: {e!r}") from e

    @staticmethod
    def tropical_to_dict(point: TropicalPoint) -> dict:
        return {"tropical": True,
                "factors": [{"type": kind, "x": list(x)} for kind, x in point.factors]}

    @classmethod
    def load_point(cls, path):
        """A geometric or tropical crystal point, depending on the "tropical" flag"""
        document = cls.load_json(path)
        kind = cls.document_type(document)
        if kind == DocumentType.TROPICAL:
            return cls.tropical_from_dict(document)
        if kind != DocumentType.CRYSTAL:
            raise ValueError(f"{path} does not hold a crystal point")
        return cls.point_from_dict(document)

    # ------------------------------------------------------------ loop elements

    @staticmethod
    def loop_element_to_dict(g) -> dict:
        """Entries as numerator and denominator coefficient lists in t, lowest power first"""
        field = g.field

        def entry(f):
            return {"num": [field.to_string(c) for c in f.num.coeffs],
                    "den": [field.to_string(c) for c in f.den.coeffs]}

        return {"n": g.n, "entries": [[entry(f) for f in row] for row in g.entries]}


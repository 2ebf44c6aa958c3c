import argparse
import logging
import sys
from random import Random

from config import configuration as config
from crystal import geometric, tropical
from crystal.tropical import TropicalPoint
from errors import NetlabError
from file_manager import DocumentType, FileManager
from loop_group.factorization import cell_data
from measurements.boundary_matrix import boundary_matrix
from measurements.genfun import boundary_genfun, one_vertex_torus_table
from measurements.lindstrom import lindstrom_matrix
from measurements.walks import boundary_measurement, cycle_measurement
from moves.grid_moves import apply_script, canonical_form, random_move_script
from moves.local_moves import apply_network_script
from network.grid import grid_to_network
from network.surface_network import SurfaceKind

EXIT_OK = 0
EXIT_UNEXPECTED = 1
EXIT_PARSE = 2
EXIT_DOMAIN = 3

CHECK_CLASSES = {
    SurfaceKind.CYLINDER: [(k,) for k in (-2, -1, 1, 2)],
    SurfaceKind.TORUS: [(i, j) for i in (-1, 0, 1) for j in (-1, 0, 1) if (i, j) != (0, 0)],
}


def setup_logging():
    # stdout carries the JSON results, so the console handler writes to stderr
    logging.basicConfig(
        level=getattr(logging, config.LOG_LEVEL, logging.INFO),
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        handlers=[
            logging.FileHandler(config.LOG_FILE),
            logging.StreamHandler(sys.stderr)
        ]
    )


class UsageError(Exception):
    """Arguments that parsed but do not make sense together"""


def _cover_points(text: str):
    """"u@0,v@1" -> [("u", 0), ("v", 1)]; a missing lift means 0"""
    points = []
    for item in text.split(","):
        vertex_id, _, lift = item.strip().partition("@")
        points.append((vertex_id, int(lift or 0)))
    return points


class Runner:
    """Executes one parsed command line and returns the JSON document to print"""

    def __init__(self, args, logger):
        self.args = args
        self.logger = logger.getChild(self.__class__.__name__)
        self.rng = Random(config.resolve_seed(args.seed))

    def run(self) -> dict:
        handler = getattr(self, f"cmd_{self.args.command.replace('-', '_')}")
        return handler()

    # ------------------------------------------------------------ measure

    def cmd_measure(self) -> dict:
        args = self.args
        net = FileManager.load_network(args.net_file)
        field = net.field
        if args.boundary:
            u, v = args.boundary
            value = boundary_measurement(net, u, v, args.homology_class or [], engine=args.engine)
            return {"value": field.to_string(value)}
        if args.cycle:
            if not args.homology_class:
                raise UsageError("--cycle needs --class")
            value = cycle_measurement(net, args.homology_class, engine=args.engine)
            return {"value": field.to_string(value)}
        if args.genfun:
            u, v = args.genfun
            f = boundary_genfun(net, u, v)
            return {"num": [field.to_string(c) for c in f.num.coeffs],
                    "den": [field.to_string(c) for c in f.den.coeffs]}
        if args.matrix:
            return FileManager.loop_element_to_dict(boundary_matrix(net))
        if args.lindstrom:
            sources, sinks = (_cover_points(text) for text in args.lindstrom)
            rows, det = lindstrom_matrix(net, sources, sinks)
            return {"matrix": [[field.to_string(v) for v in row] for row in rows],
                    "det": field.to_string(det)}
        raise UsageError("measure needs one of --boundary, --cycle, --genfun, --matrix, --lindstrom")

    def cmd_torus_table(self) -> dict:
        table = one_vertex_torus_table(self.args.k_max)
        return {"table": [[f"{int(v.numerator)}/{int(v.denominator)}" for v in row] for row in table]}

    # ------------------------------------------------------------ moves

    def cmd_apply(self) -> dict:
        args = self.args
        document = FileManager.load_json(args.net_file)
        script = FileManager.load_script(args.script_file)
        if FileManager.document_type(document) == DocumentType.GRID:
            grid = FileManager.grid_from_dict(document)
            result = apply_script(grid, script)
            before, after = grid_to_network(grid), grid_to_network(result)
            output = FileManager.grid_to_dict(result)
        else:
            before = FileManager.network_from_dict(document)
            after = apply_network_script(before, script)
            output = FileManager.network_to_dict(after)
        self.logger.info(f"applied {len(script)} moves")
        if args.check:
            return {"preserved": self._preserved(before, after)}
        return output

    def _preserved(self, before, after) -> bool:
        field = before.field
        if before.surface.kind != SurfaceKind.TORUS and before.boundary_vertices():
            if boundary_matrix(before) != boundary_matrix(after):
                self.logger.info("boundary matrix changed")
                return False
        for h in CHECK_CLASSES.get(before.surface.kind, []):
            if not field.equal(cycle_measurement(before, h), cycle_measurement(after, h)):
                self.logger.info(f"cycle measurement in class {h} changed")
                return False
        return True

    def cmd_canonical(self) -> dict:
        grid = FileManager.load_grid(self.args.grid_file)
        result, a, b, w = canonical_form(grid)
        return {"a": a, "b": b, "w": list(w), "grid": FileManager.grid_to_dict(result)}

    def cmd_scramble(self) -> dict:
        grid = FileManager.load_grid(self.args.grid_file)
        result, script = random_move_script(grid, self.rng, self.args.steps)
        return {"grid": FileManager.grid_to_dict(result), "script": FileManager.script_to_list(script)}

    # ------------------------------------------------------------ crystals

    def cmd_crystal(self) -> dict:
        args = self.args
        point = FileManager.load_point(args.point_file)
        if isinstance(point, TropicalPoint):
            return self._tropical(point)
        field = point.field
        if args.op in ("eps", "phi", "gamma"):
            value = getattr(geometric, args.op)(point, args.i)
            return {"value": field.to_string(value)}
        if args.op == "e":
            result = geometric.e_c(point, args.i, args.c)
        elif args.op == "s":
            result = geometric.weyl_s(point, args.i)
        elif args.op == "r":
            result = geometric.r_matrix(point, args.j)
        else:
            raise UsageError(f"unknown crystal operation {args.op!r}")
        return FileManager.point_to_dict(result)

    def _tropical(self, point: TropicalPoint) -> dict:
        args = self.args
        if args.op in ("eps", "phi"):
            eps_i, phi_i = tropical.trop_eps_phi(point, args.i)
            return {"value": eps_i if args.op == "eps" else phi_i}
        if args.op == "e":
            result = tropical.trop_e(point, args.i)
            if result is None:
                return {"result": None}
        elif args.op == "r":
            result = tropical.trop_r(point, args.j)
        else:
            raise UsageError(f"{args.op!r} is not defined on tropical points")
        return FileManager.tropical_to_dict(result)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="netlab", description="Measurements, moves and crystals on surface networks")
    parser.add_argument("--seed", type=int, default=None, help="random seed; NETLAB_SEED takes precedence")
    commands = parser.add_subparsers(dest="command", required=True)

    measure = commands.add_parser("measure", help="boundary and cycle measurements")
    measure.add_argument("net_file")
    measure.add_argument("--boundary", nargs=2, metavar=("U", "V"))
    measure.add_argument("--cycle", action="store_true")
    measure.add_argument("--class", dest="homology_class", nargs="+", type=int, metavar="K")
    measure.add_argument("--genfun", nargs=2, metavar=("U", "V"))
    measure.add_argument("--matrix", action="store_true")
    measure.add_argument("--lindstrom", nargs=2, metavar=("I", "J"),
                         help="comma separated vertex@lift lists of sources and sinks")
    measure.add_argument("--engine", choices=("paths", "series"), default="paths")

    table = commands.add_parser("torus-table", help="one-vertex torus closed form")
    table.add_argument("k_max", type=int)

    apply = commands.add_parser("apply", help="apply a move script")
    apply.add_argument("net_file")
    apply.add_argument("script_file")
    apply.add_argument("--check", action="store_true", help="report whether measurements are preserved")

    canonical = commands.add_parser("canonical", help="canonical form of a cylinder grid")
    canonical.add_argument("grid_file")

    scramble = commands.add_parser("scramble", help="random measurement-preserving moves")
    scramble.add_argument("grid_file")
    scramble.add_argument("--steps", type=int, default=20)

    crystal = commands.add_parser("crystal", help="geometric or tropical crystal operators")
    crystal.add_argument("point_file")
    crystal.add_argument("op", choices=("e", "s", "r", "eps", "phi", "gamma"))
    crystal.add_argument("--i", type=int, default=0)
    crystal.add_argument("--j", type=int, default=0)
    crystal.add_argument("--c", default="1")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    setup_logging()
    logger = logging.getLogger(__name__)
    try:
        document = Runner(args, logger).run()
    except NetlabError as e:
        logger.warning(f"{e.__class__.__name__}: {e.detail}")
        print(FileManager.dumps(e.to_dict()))
        return EXIT_DOMAIN
    except (ValueError, UsageError) as e:
        logger.error(f"bad input: {e}")
        print(FileManager.dumps({"error": "ParseError", "detail": str(e)}))
        return EXIT_PARSE
    except Exception as e:
        logger.error(f"Command {args.command} failed: {e}", exc_info=True)
        return EXIT_UNEXPECTED
    print(FileManager.dumps(document))
    return EXIT_OK


if __name__ == '__main__':
    sys.exit(main())

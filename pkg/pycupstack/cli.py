"""The ``cupstack`` command line tool

Results go to stdout (or to files given with ``-o``) as JSON or CSV; logging goes to
stderr. Commands that decide something exit with 0 for a positive answer, 1 for a
definitive negative one and 2 when no answer could be established.
"""

import argparse
import json
import logging
import os
import sys
import time

from .certificates.base import CertificateMap, read_certificates, write_certificates
from .certificates.lemmas import (
    check_pendant_certificate,
    find_indep_certificate,
    prove_strongly_nonstackable,
    validate_certificate,
    validate_certificate_map,
)
from .config import Config
from .exceptions import (
    BudgetExceededError,
    ChunkingError,
    CupStackError,
    NoHamiltonPathError,
    NotStackableError,
    ParameterError,
)
from .game.base import verify_sequence
from .game.io import read_sequence, sequence_to_data, write_sequence
from .graphs.analysis import canonical_form
from .graphs.base import PathPartition, bipartition
from .graphs.families import bipartite_closure, build_family
from .graphs.io import format_graph, load_graph, to_dot, write_graph
from .search.base import Classification, Status, write_result, write_weight_csv
from .search.experiments import census_stackable_nonhamiltonian, find_alternating_chain
from .search.stackability import decide_stackable, decide_t_stackable
from .search.weights import min_weight, weight_table
from .solvers.bipartite import solve_bipartite_paths
from .solvers.paths import solve_via_hamilton
from .solvers.powers import solve_power
from .solvers.trees import tree_path_partition

logger = logging.getLogger(__name__)

EXIT_YES = 0
EXIT_NO = 1
EXIT_UNKNOWN = 2

LIST_PARAMETERS = {"removed", "dims", "groups"}
GRAPH_PARAMETERS = {"base"}


def _parse_value(key, text):
    if key in GRAPH_PARAMETERS:
        return load_graph(text)
    if key in LIST_PARAMETERS:
        return [int(x) for x in text.split(",") if x]
    try:
        return int(text)
    except ValueError:
        return text


def _family_parameters(extra):
    """Turn ``--key value`` pairs left over by the parser into generator keyword arguments"""
    params = {}
    i = 0
    while i < len(extra):
        token = extra[i]
        if not token.startswith("--"):
            raise ParameterError("unexpected argument {!r}".format(token))
        key, _, value = token[2:].partition("=")
        key = key.replace("-", "_")
        if not value:
            if i + 1 >= len(extra):
                raise ParameterError("family parameter --{} needs a value".format(key))
            value = extra[i + 1]
            i += 1
        params[key] = _parse_value(key, value)
        i += 1
    return params


def _parse_partition(text):
    """``"2,0,3;4,1,5"`` to a path partition"""
    try:
        return PathPartition([int(v) for v in part.split(",")] for part in text.split(";") if part.strip())
    except ValueError:
        raise ParameterError("partition must look like 2,0,3;4,1,5, got {!r}".format(text))


def _parse_target(text):
    try:
        if "," in text:
            return tuple(int(c) for c in text.split(","))
        return int(text)
    except ValueError:
        raise ParameterError("target must be a vertex index or comma separated coordinates, got {!r}".format(text))


def _emit(data, destination=None):
    text = json.dumps(data, indent=2)
    if destination:
        with open(destination, "w") as f:
            f.write(text + "\n")
    else:
        print(text)


def _stamp(data, config, started):
    if not config.deterministic:
        data["elapsed"] = round(time.monotonic() - started, 3)
    return data


def cmd_gen(args, config, extra):
    g = build_family(args.family, **_family_parameters(extra))
    if args.output:
        write_graph(g, args.output)
    else:
        sys.stdout.write(format_graph(g))
    if args.emit_dot:
        with open(args.emit_dot, "w") as f:
            f.write(to_dot(g))
    logger.info("generated %s with %d vertices and %d edges", g.describe(), g.n, g.m)
    return EXIT_YES


def _solution_output(args, seq, g, t):
    if args.output:
        write_sequence(seq, args.output, args.plan)
    else:
        print(json.dumps(sequence_to_data(seq)))
    logger.info("%d moves of total weight %d stack %s onto %s", len(seq), seq.weight, g.describe(), t)
    return EXIT_YES


def _search_solution(args, g, t, config):
    verdict = decide_t_stackable(g, t, config)
    if verdict.status is Status.STACKABLE:
        return _solution_output(args, verdict.witness, g, t)
    print(json.dumps({"target": t, "status": verdict.status.value}))
    return EXIT_NO if verdict.status is Status.NOT_STACKABLE else EXIT_UNKNOWN


def cmd_solve(args, config, extra):
    g = load_graph(args.graph)
    t = _parse_target(args.target)
    partition = _parse_partition(args.partition) if args.partition else None
    method = args.method

    if method == "power":
        if args.power is None:
            raise ParameterError("--method power needs --power")
        if partition is None:
            if not g.is_tree():
                raise ParameterError("--method power needs --partition unless the base graph is a tree")
            partition = tree_path_partition(g)
        try:
            seq = solve_power(g, args.power, partition, t, config)
        except ChunkingError as e:
            logger.warning("%s", e)
            print(json.dumps({"target": args.target, "status": Status.UNKNOWN.value, "reason": str(e)}))
            return EXIT_UNKNOWN
        return _solution_output(args, seq, g, tuple(seq.plan["target_coordinates"]))

    if not isinstance(t, int):
        raise ParameterError("coordinate targets are only meaningful with --method power")
    if method in ("hamilton", "auto"):
        try:
            return _solution_output(args, solve_via_hamilton(g, t, config=config), g, t)
        except NoHamiltonPathError as e:
            if method == "hamilton":
                print(json.dumps({"target": t, "status": Status.UNKNOWN.value, "reason": str(e)}))
                return EXIT_UNKNOWN
            logger.info("%s, trying other methods", e)
    if method == "bipartite-paths" or (method == "auto" and partition is not None and bipartition(g) is not None):
        if partition is None:
            raise ParameterError("--method bipartite-paths needs --partition")
        seq = solve_bipartite_paths(g, partition, t)
        if seq is not None:
            return _solution_output(args, seq, g, t)
        if method == "bipartite-paths":
            print(json.dumps({"target": t, "status": Status.UNKNOWN.value, "reason": "a path could not be chunked"}))
            return EXIT_UNKNOWN
    return _search_solution(args, g, t, config)


def _write_witnesses(result, directory):
    paths = {}
    if not directory:
        return paths
    os.makedirs(directory, exist_ok=True)
    for t, seq in sorted(result.witness.items()):
        path = os.path.join(directory, "witness_{}.json".format(t))
        write_sequence(seq, path)
        paths[t] = path
    return paths


def cmd_decide(args, config, extra):
    started = time.monotonic()
    g = load_graph(args.graph)
    targets = [int(t) for t in args.targets.split(",")] if args.targets else None
    result = decide_stackable(g, config, use_symmetry=args.symmetry, targets=targets)
    data = result.to_data(args.graph, _write_witnesses(result, args.witness_dir))
    _emit(_stamp(data, config, started), args.output)
    classification = result.classification
    if classification is Classification.STACKABLE:
        return EXIT_YES
    if classification is Classification.UNKNOWN:
        return EXIT_UNKNOWN
    return EXIT_NO


def cmd_minweight(args, config, extra):
    g = load_graph(args.graph)
    try:
        if not args.all_targets:
            weight, seq = min_weight(g, args.target, config)
            print(weight)
            if args.output:
                write_sequence(seq, args.output)
            return EXIT_YES
        table = weight_table(g, config)
    except NotStackableError as e:
        logger.warning("%s", e)
        return EXIT_NO
    except BudgetExceededError as e:
        logger.warning("%s", e)
        return EXIT_UNKNOWN
    print(",".join(str(value) for value in table.values()))
    if args.csv:
        write_weight_csv([table], args.csv)
    if args.json:
        write_result(table.to_data(args.graph), args.json)
    return EXIT_YES


def cmd_census(args, config, extra):
    census = census_stackable_nonhamiltonian(args.max_n, config)
    data = {
        "max_n": args.max_n,
        "graphs": [
            {"name": g.name, "n": g.n, "m": g.m, "edges": [list(e) for e in g.edges], "canonical_form": canonical_form(g)}
            for g in census
        ],
        "undecided": [{"name": g.name, "reason": reason} for g, reason in census.undecided],
    }
    _emit(data, args.output)
    if census.undecided and not census.graphs:
        return EXIT_UNKNOWN
    return EXIT_YES if census.graphs else EXIT_NO


def _align_super(base, candidate):
    # A super graph given by shorthand uses its own numbering; when it is the
    # complete bipartite graph on the base's colour classes, use the base's numbering.
    if candidate.n == base.n and base.is_subgraph_of(candidate):
        return candidate
    if bipartition(base) is not None:
        closure = bipartite_closure(base)
        if canonical_form(closure) == canonical_form(candidate):
            logger.info("using %s on the colour classes of %s", candidate.describe(), base.describe())
            return closure
    raise ParameterError("{} does not contain {} on the same vertices".format(candidate.describe(), base.describe()))


def cmd_chain(args, config, extra):
    base = load_graph(args.base)
    super_graph = _align_super(base, load_graph(args.super))
    chain = find_alternating_chain(base, super_graph, args.length, config)
    _emit({"base": args.base, "super": args.super, "length": args.length,
           "chain": None if chain is None else [list(e) for e in chain]}, args.output)
    return EXIT_YES if chain is not None else EXIT_NO


def cmd_certify(args, config, extra):
    g = load_graph(args.graph)
    if args.check:
        item = read_certificates(args.check)
        if isinstance(item, CertificateMap):
            valid = validate_certificate_map(g, item)
        else:
            valid = validate_certificate(g, item)
        print(json.dumps({"valid": valid}))
        return EXIT_YES if valid else EXIT_NO
    if args.target is not None:
        certificate = check_pendant_certificate(g, args.target) or find_indep_certificate(g, args.target, config)
        if certificate is None:
            print(json.dumps({"target": args.target, "certificate": None}))
            return EXIT_NO
        if args.output:
            write_certificates(certificate, args.output)
        print(json.dumps(certificate.to_data(), indent=2))
        return EXIT_YES
    certificates = prove_strongly_nonstackable(g, config)
    if args.output:
        write_certificates(certificates, args.output)
    print(json.dumps(certificates.to_data(), indent=2))
    return EXIT_YES if certificates.complete else EXIT_NO


def cmd_verify(args, config, extra):
    g = load_graph(args.graph)
    verdict = verify_sequence(g, args.target, read_sequence(args.solution))
    print(json.dumps({"valid": verdict.valid, "index": verdict.index, "reason": verdict.reason}))
    return EXIT_YES if verdict.valid else EXIT_NO


def build_parser():
    parser = argparse.ArgumentParser(prog="cupstack", description=__doc__.splitlines()[0], allow_abbrev=False)
    parser.add_argument("-v", "--verbose", action="count", default=0, help="-v for progress, -vv for detail")
    parser.add_argument("--workers", type=int, default=None, help="worker processes for per-target work")
    parser.add_argument("--budget", type=int, default=None, help="state budget for searches")
    parser.add_argument("--no-deterministic", action="store_true", help="allow timings in the output")
    commands = parser.add_subparsers(dest="command", required=True)

    gen = commands.add_parser("gen", help="generate a graph of a named family", allow_abbrev=False)
    gen.add_argument("--family", required=True)
    gen.add_argument("-o", "--output")
    gen.add_argument("--emit-dot", metavar="FILE")
    gen.set_defaults(handler=cmd_gen, open_ended=True)

    solve = commands.add_parser("solve", help="find a winning sequence onto one target")
    solve.add_argument("graph")
    solve.add_argument("--target", required=True)
    solve.add_argument("--method", choices=["auto", "hamilton", "bipartite-paths", "power", "search"], default="auto")
    solve.add_argument("--partition", help="paths separated by ';', vertices by ','")
    solve.add_argument("--power", type=int)
    solve.add_argument("-o", "--output")
    solve.add_argument("--plan", help="write the construction plan here")
    solve.set_defaults(handler=cmd_solve)

    decide = commands.add_parser("decide", help="decide stackability for every target")
    decide.add_argument("graph")
    decide.add_argument("--targets", help="comma separated targets")
    decide.add_argument("--symmetry", action="store_true", help="search one target per automorphism orbit")
    decide.add_argument("--witness-dir")
    decide.add_argument("-o", "--output")
    decide.set_defaults(handler=cmd_decide)

    minweight = commands.add_parser("minweight", help="least total weight of a winning sequence")
    minweight.add_argument("graph")
    group = minweight.add_mutually_exclusive_group(required=True)
    group.add_argument("--target", type=int)
    group.add_argument("--all-targets", action="store_true", help="one weight per vertex, in vertex order")
    minweight.add_argument("-o", "--output", help="witness file when --target is given")
    minweight.add_argument("--csv")
    minweight.add_argument("--json")
    minweight.set_defaults(handler=cmd_minweight)

    census = commands.add_parser("census", help="stackable graphs without a Hamilton path")
    census.add_argument("--max-n", type=int, required=True)
    census.add_argument("-o", "--output")
    census.set_defaults(handler=cmd_census)

    chain = commands.add_parser("chain", help="edges whose addition alternates stackability")
    chain.add_argument("--base", required=True)
    chain.add_argument("--super", required=True)
    chain.add_argument("--length", type=int, required=True)
    chain.add_argument("-o", "--output")
    chain.set_defaults(handler=cmd_chain)

    certify = commands.add_parser("certify", help="certify non-stackability")
    certify.add_argument("graph")
    certify.add_argument("--target", type=int)
    certify.add_argument("--check", metavar="FILE", help="validate a certificate file instead")
    certify.add_argument("-o", "--output")
    certify.set_defaults(handler=cmd_certify)

    verify = commands.add_parser("verify", help="check a solution file")
    verify.add_argument("graph")
    verify.add_argument("solution")
    verify.add_argument("--target", type=int, required=True)
    verify.set_defaults(handler=cmd_verify)
    return parser


def _configure_logging(verbosity):
    level = logging.WARNING
    if verbosity == 1:
        level = logging.INFO
    elif verbosity >= 2:
        level = logging.DEBUG
    logging.basicConfig(level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")


def main(argv=None):
    parser = build_parser()
    args, extra = parser.parse_known_args(argv)
    if extra and not getattr(args, "open_ended", False):
        parser.error("unrecognized arguments: {}".format(" ".join(extra)))
    _configure_logging(args.verbose)
    try:
        overrides = {"deterministic": not args.no_deterministic}
        if args.workers is not None:
            overrides["workers"] = args.workers
        config = Config.from_environment(**overrides)
        if args.budget is not None:
            config.state_budget = args.budget
        return args.handler(args, config, extra)
    except CupStackError as e:
        logger.error("%s", e)
        return EXIT_UNKNOWN


if __name__ == "__main__":
    sys.exit(main())

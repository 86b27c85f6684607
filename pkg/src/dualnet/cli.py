"""Command-line interface: the scriptable face of the toolkit.

Subcommands mirror the engine surface: ``dcs`` and ``communities`` run the
two extraction pipelines on a dual network given as edge-list files,
``baseline`` runs the conceptual-only reference method, ``generate``
writes synthetic planted-partition networks, ``bench`` produces timing
and comparison CSVs, ``evaluate`` scores extracted against known
communities.

Exit codes: 0 success, 2 input or usage error, 3 empty result (nothing
alignable). Data goes to stdout unless --output is given; diagnostics go
to stderr. Every randomized step takes a --seed (default 0), and a fixed
seed plus fixed inputs reproduces identical bytes.
"""

from __future__ import annotations

import argparse
import logging
import os
import sys
from typing import Iterable, Sequence

from dualnet.align import AlignmentParams, build_alignment_graph, serialize_alignment
from dualnet.benchmark import (
    DEFAULT_BENCH_SIZES,
    benchmark_csv,
    compare_methods,
    comparison_csv,
    run_benchmark,
)
from dualnet.community import (
    ModularCommunity,
    NoAlignableRegionError,
    baseline_louvain_conceptual,
    dcs_from_alignment,
    modular_from_alignment,
)
from dualnet.evaluation import evaluate
from dualnet.graph import (
    DualNetwork,
    LoadError,
    ParseError,
    load_dual_network,
    parse_edge_list,
    parse_similarity,
    serialize_edge_list,
)
from dualnet.synthetic import SyntheticSpec, generate_synthetic_dual

log = logging.getLogger("dualnet")


def _read_dual_network(args) -> DualNetwork:
    with open(args.physical, encoding="utf-8") as fh:
        physical = parse_edge_list(fh, weighted=False)
    with open(args.conceptual, encoding="utf-8") as fh:
        conceptual = parse_edge_list(fh, weighted=True)
    mapping = None
    if args.similarity:
        with open(args.similarity, encoding="utf-8") as fh:
            mapping = parse_similarity(fh)
    return load_dual_network(physical, conceptual, mapping)


def _write_output(text: str, path: str | None) -> None:
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def format_community_lines(
    entries: Iterable[tuple[int, float, Iterable[str], Iterable[str]]]
) -> str:
    """One line per community: rank, score, physical ids, '|', conceptual ids."""
    lines = []
    for rank, score, physical, conceptual in entries:
        phys = " ".join(sorted(physical))
        conc = " ".join(sorted(conceptual))
        lines.append(f"{rank} {score:.6f} {phys} | {conc}")
    return "\n".join(lines) + ("\n" if lines else "")


def _communities_text(
    communities: Sequence[ModularCommunity], header: str
) -> str:
    body = format_community_lines(
        (c.rank, c.modularity_contribution, c.physical_nodes, c.conceptual_nodes)
        for c in communities
    )
    return f"# {header}\n{body}"


def cmd_dcs(args) -> int:
    dn = _read_dual_network(args)
    params = AlignmentParams(delta=args.delta, min_similarity=args.min_similarity)
    ag = build_alignment_graph(dn, params)
    if args.dump_alignment:
        _write_output(serialize_alignment(ag), args.dump_alignment)
    result = dcs_from_alignment(ag, dn)
    header = (
        f"density={result.density:.6f}"
        f" alignment_nodes={len(result.alignment_nodes)}"
        f" physical_nodes={len(result.physical_nodes)}"
        f" conceptual_nodes={len(result.conceptual_nodes)}"
        f" physical_connected={str(result.physical_connected).lower()}"
    )
    body = format_community_lines(
        [(1, result.density, result.physical_nodes, result.conceptual_nodes)]
    )
    _write_output(f"# {header}\n{body}", args.output)
    return 0


def cmd_communities(args) -> int:
    dn = _read_dual_network(args)
    params = AlignmentParams(delta=args.delta, min_similarity=args.min_similarity)
    ag = build_alignment_graph(dn, params)
    if args.dump_alignment:
        _write_output(serialize_alignment(ag), args.dump_alignment)
    communities = modular_from_alignment(ag, dn, k=args.k, seed=args.seed)
    _write_output(
        _communities_text(communities, f"communities={len(communities)}"),
        args.output,
    )
    return 0


def cmd_baseline(args) -> int:
    dn = _read_dual_network(args)
    communities = baseline_louvain_conceptual(dn, seed=args.seed)
    if args.k is not None:
        communities = communities[: args.k]
    _write_output(
        _communities_text(communities, f"communities={len(communities)}"),
        args.output,
    )
    return 0


def cmd_generate(args) -> int:
    spec = SyntheticSpec(
        n_nodes=args.nodes,
        n_physical_edges=args.physical_edges,
        n_conceptual_edges=args.conceptual_edges,
        n_communities=args.communities,
        intra_edge_fraction=args.intra_fraction,
        intra_weight_range=tuple(args.intra_weights),
        inter_weight_range=tuple(args.inter_weights),
        seed=args.seed,
    )
    dn, known = generate_synthetic_dual(spec)
    targets = {
        f"{args.out}.physical.el": serialize_edge_list(dn.physical),
        f"{args.out}.conceptual.el": serialize_edge_list(dn.conceptual, weighted=True),
        f"{args.out}.truth.communities": "".join(
            " ".join(sorted(block)) + "\n" for block in known
        ),
    }
    for path, text in targets.items():
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
        log.info("wrote %s", path)
    return 0


def _parse_size_tuple(text: str) -> tuple[int, int, int, int]:
    parts = text.split(":")
    if len(parts) != 4:
        raise argparse.ArgumentTypeError(
            f"size must be nodes_p:edges_p:nodes_c:edges_c, got {text!r}"
        )
    return tuple(int(p) for p in parts)  # type: ignore[return-value]


def cmd_bench(args) -> int:
    params = AlignmentParams(delta=args.delta)
    # --sizes omitted: default ladder; --sizes with no values: empty run
    sizes = list(DEFAULT_BENCH_SIZES) if args.sizes is None else args.sizes
    records = run_benchmark(
        sizes,
        params,
        seed=args.seed,
        repeats=args.repeats,
        n_communities=args.communities,
        k=args.communities,
    )
    _write_output(benchmark_csv(records), args.timings_csv)
    if args.compare_networks > 0:
        spec = SyntheticSpec(
            n_nodes=args.nodes,
            n_physical_edges=args.physical_edges,
            n_conceptual_edges=args.conceptual_edges,
            n_communities=args.communities,
            seed=args.seed,
        )
        summaries = compare_methods(
            args.compare_networks, spec, params, seed=args.seed
        )
        _write_output(comparison_csv(summaries), args.compare_csv)
    return 0


def _read_communities_file(path: str, side: str) -> list[set[str]]:
    """Read a communities file: plain node lines, or extraction output with
    'rank score physical... | conceptual...' lines."""
    communities = []
    with open(path, encoding="utf-8") as fh:
        for raw in fh:
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            if "|" in line:
                left, _, right = line.partition("|")
                tokens = left.split()[2:] if side == "physical" else right.split()
            else:
                tokens = line.split()
            if tokens:
                communities.append(set(tokens))
    return communities


def cmd_evaluate(args) -> int:
    known = _read_communities_file(args.known, args.side)
    extracted = _read_communities_file(args.extracted, args.side)
    if not known:
        raise ValueError(f"no communities found in {args.known!r}")
    if not extracted:
        raise ValueError(f"no communities found in {args.extracted!r}")
    report = evaluate(known, extracted)
    text = (
        f"sn={report.sn:.6f}\n"
        f"ppv={report.ppv:.6f}\n"
        f"acc={report.acc:.6f}\n"
    )
    _write_output(text, args.output)
    return 0


def _add_dual_input_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--physical", required=True, help="unweighted edge-list file")
    sub.add_argument("--conceptual", required=True, help="weighted edge-list file")
    sub.add_argument(
        "--similarity",
        help="node mapping file (physical conceptual [similarity]); "
        "defaults to the identity mapping on shared node ids",
    )


def _add_common_flags(sub: argparse.ArgumentParser, with_delta=True) -> None:
    if with_delta:
        sub.add_argument(
            "--delta", type=int, default=1, help="conceptual hop-distance slack (>= 1)"
        )
        sub.add_argument(
            "--min-similarity",
            type=float,
            default=0.0,
            help="drop mapping pairs below this similarity",
        )
    sub.add_argument("--seed", type=int, default=0, help="seed for randomized steps")
    sub.add_argument("--output", help="write results here instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dualnet",
        description="Extract densest and modular communities from dual networks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_dcs = sub.add_parser("dcs", help="densest connected subgraph")
    _add_dual_input_flags(p_dcs)
    _add_common_flags(p_dcs)
    p_dcs.add_argument(
        "--dump-alignment", help="also write the alignment graph edge list here"
    )
    p_dcs.set_defaults(func=cmd_dcs)

    p_com = sub.add_parser("communities", help="top-k modular communities")
    _add_dual_input_flags(p_com)
    _add_common_flags(p_com)
    p_com.add_argument("--k", type=int, default=25, help="number of communities")
    p_com.add_argument(
        "--dump-alignment", help="also write the alignment graph edge list here"
    )
    p_com.set_defaults(func=cmd_communities)

    p_base = sub.add_parser(
        "baseline", help="classical Louvain on the conceptual network"
    )
    _add_dual_input_flags(p_base)
    _add_common_flags(p_base, with_delta=False)
    p_base.add_argument("--k", type=int, default=None, help="truncate to top k")
    p_base.set_defaults(func=cmd_baseline)

    p_gen = sub.add_parser("generate", help="synthetic planted-partition dual network")
    p_gen.add_argument("--nodes", type=int, default=500)
    p_gen.add_argument("--physical-edges", type=int, default=3000)
    p_gen.add_argument("--conceptual-edges", type=int, default=4000)
    p_gen.add_argument("--communities", type=int, default=4)
    p_gen.add_argument("--intra-fraction", type=float, default=0.8)
    p_gen.add_argument(
        "--intra-weights", type=float, nargs=2, default=[0.7, 1.0], metavar=("LO", "HI")
    )
    p_gen.add_argument(
        "--inter-weights", type=float, nargs=2, default=[0.0, 0.3], metavar=("LO", "HI")
    )
    p_gen.add_argument("--seed", type=int, default=0)
    p_gen.add_argument(
        "--out", required=True, help="prefix for the three generated files"
    )
    p_gen.set_defaults(func=cmd_generate)

    p_bench = sub.add_parser("bench", help="timing and comparison harness")
    p_bench.add_argument(
        "--sizes",
        type=_parse_size_tuple,
        nargs="*",
        default=None,
        help="size tuples nodes_p:edges_p:nodes_c:edges_c "
        "(default: the built-in growth ladder)",
    )
    p_bench.add_argument("--delta", type=int, default=2)
    p_bench.add_argument("--seed", type=int, default=0)
    p_bench.add_argument("--repeats", type=int, default=5)
    p_bench.add_argument("--communities", type=int, default=4)
    p_bench.add_argument("--timings-csv", help="timing CSV path (default stdout)")
    p_bench.add_argument(
        "--compare-networks",
        type=int,
        default=0,
        help="if > 0, also compare framework vs baseline over this many networks",
    )
    p_bench.add_argument("--compare-csv", help="comparison CSV path (default stdout)")
    p_bench.add_argument("--nodes", type=int, default=500)
    p_bench.add_argument("--physical-edges", type=int, default=3000)
    p_bench.add_argument("--conceptual-edges", type=int, default=4000)
    p_bench.set_defaults(func=cmd_bench)

    p_eval = sub.add_parser("evaluate", help="score extracted against known communities")
    p_eval.add_argument("--known", required=True, help="ground-truth communities file")
    p_eval.add_argument("--extracted", required=True, help="extraction output file")
    p_eval.add_argument(
        "--side",
        choices=("physical", "conceptual"),
        default="physical",
        help="which projection to score when reading extraction output",
    )
    p_eval.add_argument("--output", help="write the report here instead of stdout")
    p_eval.set_defaults(func=cmd_evaluate)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    logging.basicConfig(
        level=os.environ.get("DUALNET_LOG", "WARNING"),
        format="%(levelname)s %(name)s: %(message)s",
    )
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except NoAlignableRegionError as exc:
        print(f"dualnet: {exc}", file=sys.stderr)
        return 3
    except (ParseError, LoadError, OSError, ValueError) as exc:
        print(f"dualnet: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

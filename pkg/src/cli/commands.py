import sys
from pathlib import Path

from src.apcodes import ap_design, ap_efficiency, ap_w_max
from src.ddifc import analyze
from src.equiv import build_certificate, class_search, load_certificate, save_certificate, verify_certificate
from src.errors import CapacityExceeded, IfcError, ParseError
from src.gauss import sweep, write_csv
from src.cli.io import load_codebook, load_matrix, load_real_matrix, load_simulation_file, search_bounds
from src.layered import asymptotic_efficiency, build_layered, layered_efficiency, layered_sets
from src.schemas import ChannelMatrix, Codebook, GaussSimConfig
from src.utils.formats import format_codebook, format_matrix
from src.utils.logger import get_logger

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_PARSE = 2


def _tuple(values) -> str:
    return "(" + ", ".join(str(value) for value in values) + ")"


def cmd_analyze(args) -> int:
    try:
        H = load_matrix(args.matrix)
        C = load_codebook(args.codebook)
    except ParseError as exc:
        logger.error(f"❌ [Analyze] {exc}")
        return EXIT_PARSE
    if H.K != C.K:
        logger.error(f"❌ [Analyze] matrix has {H.K} users, codebook has {C.K}")
        return EXIT_PARSE

    try:
        report = analyze(H, C)
    except CapacityExceeded as exc:
        logger.error(f"❌ [Analyze] {exc}")
        print(f"too large to check: {exc}")
        return EXIT_PARSE
    if not report.decodable:
        first, second = report.witness
        print(f"not decodable, receiver {report.receiver + 1}: {_tuple(first)} vs {_tuple(second)}, "
              f"W_max={report.w_max}")
        return EXIT_NEGATIVE
    print(f"decodable, W_max={report.w_max}, eff={report.efficiency:.4f}")
    return EXIT_OK


def cmd_design(args) -> int:
    H = load_matrix(args.matrix)
    code = ap_design(H, isolated_size=args.isolated_size)
    codebook = code.codebook
    if args.output:
        Path(args.output).write_text(format_codebook(codebook.sets))

    note = "" if code.verified else " (unverified: above the enumeration cap)"
    print(f"s={_tuple(code.s)}, W_max={ap_w_max(H, code.s)}, eff={ap_efficiency(H, code.s):.4f}{note}")
    if not args.output:
        sys.stdout.write(format_codebook(codebook.sets))
    return EXIT_OK


def cmd_search(args) -> int:
    H = load_matrix(args.matrix)
    bounds = search_bounds(
        {
            "r_max": args.r_max,
            "s_cap": args.s_cap,
            "time_budget_secs": args.time_budget_secs,
            "divide_rows": False if args.no_row_division else None,
        },
        args.config,
    )
    result = class_search(H, bounds)
    certificate = build_certificate(result)
    if args.output:
        save_certificate(certificate, args.output)
    else:
        print(certificate.model_dump_json(indent=2))

    summary = sys.stdout if args.output else sys.stderr
    print(
        f"eff={result.efficiency:.4f}, r={_tuple(result.transform.r)}, "
        f"d={_tuple(certificate.model_dump()['transform']['d'])}, s={_tuple(result.code.s)}, "
        f"candidates={result.candidates_examined}" + (", truncated" if result.truncated else ""),
        file=summary,
    )
    summary.write(format_matrix(result.best_matrix.entries))
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        certificate = load_certificate(args.certificate)
    except (OSError, ValueError) as exc:
        logger.error(f"❌ [Verify] cannot read certificate: {exc}")
        return EXIT_PARSE
    try:
        report = verify_certificate(certificate)
    except CapacityExceeded as exc:
        logger.error(f"❌ [Verify] {exc}")
        return EXIT_NEGATIVE
    except IfcError as exc:
        print(f"certificate rejected: {exc}")
        return EXIT_NEGATIVE
    print(f"certificate verified, W_max={report.w_max}, eff={report.efficiency:.4f}")
    return EXIT_OK


def cmd_export(args) -> int:
    try:
        certificate = load_certificate(args.certificate)
    except (OSError, ValueError) as exc:
        logger.error(f"❌ [Export] cannot read certificate: {exc}")
        return EXIT_PARSE
    report = verify_certificate(certificate)

    # The verified codebook is layered as stated, whatever design produced it
    source = ChannelMatrix(entries=certificate.source)
    matrix = ChannelMatrix(entries=certificate.matrix)
    primary = Codebook(sets=certificate.codebook)
    code = build_layered(primary, max(report.w_max, 2), args.depth, source=matrix, transform=certificate.transform)

    sets = layered_sets(code)
    if args.output:
        Path(args.output).write_text(format_codebook(sets.sets))
    else:
        sys.stdout.write(format_codebook(sets.sets))

    aeff = asymptotic_efficiency(primary, code.bin_size, source=matrix)
    direct = layered_efficiency(source, code)
    print(f"W={code.bin_size}, l={args.depth}, sizes={_tuple(code.sizes)}, eff={direct:.4f}, aeff={aeff:.4f}",
          file=sys.stdout if args.output else sys.stderr)
    return EXIT_OK


def cmd_simulate(args) -> int:
    sim = load_simulation_file(args.config)
    matrix = load_real_matrix(sim.matrix)
    # Without an explicit noise the first SNR point sets the reference level
    noise = sim.power * 10 ** (-sim.snr_db[0] / 10) if sim.noise is None else sim.noise
    cfg = GaussSimConfig(
        matrix=matrix,
        power=sim.power,
        noise=noise,
        n=sim.n,
        depth=sim.depth,
        trials=sim.trials,
        mode=sim.mode,
        seed=sim.seed,
        r_max=sim.r_max,
        s_cap=sim.s_cap,
        decoder=sim.decoder,
        powers=sim.powers,
        noises=sim.noises,
    )
    df = sweep(cfg, sim.snr_db or None)
    write_csv(df, args.output or sys.stdout)
    return EXIT_OK

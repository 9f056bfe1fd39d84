# -*- coding: utf-8 -*-
"""
Spin-Wave Sector Toolkit
Main entry point: exact diagonalization of the isotropic Heisenberg ferromagnet
sector by sector, with the magnetism criterion evaluated on small boxes

Usage:
    python main.py lattice-info --dims 2x5
    python main.py spectrum --dims 1x2 --sector 1
    python main.py traces --dims 2x5 --step 1 --beta 0.5 --beta 1
    python main.py criterion --dims 2x5 --beta 0 --beta 1 --format text
    python main.py verify --dims 1x3
    python main.py sweep --sweep-dims 2x5 1x10 --format xlsx --out sweep.xlsx

Exit codes:
    0 success, 1 validation error, 2 capacity or numerical breakdown,
    3 verification failure
"""

import argparse
import sys
from pathlib import Path
from typing import List, Optional

# Add project root to path
sys.path.insert(0, str(Path(__file__).parent))

import numpy as np
import pandas as pd

from checks.base import VerifyContext
from checks.runner import VerificationSuite
from criterion import CriterionConfig, CriterionReport, evaluate_criterion
from lattice import Lattice, build_rectangular, parse_dims
from operators import assemble_hamiltonian
from output.merger import ReportMerger
from output.writers import emit, export_matrix_market, to_csv, to_json, to_text
from spectral import eigendecompose, kernel_split, sector_traces, spectra_table, split_trace
from utils.config_loader import RunConfig, build_run_config, load_config_file
from utils.errors import SpinWaveError, ValidationError, VerificationError
from utils.log import configure_logging, get_logger

logger = get_logger("main")

CRITERION_BETAS = [0.0, 0.5, 1.0, 2.0, 4.0]
VERIFY_BETAS = [0.1, 0.5, 1.0, 2.0, 5.0]


class ArgumentParser(argparse.ArgumentParser):
    """argparse whose usage errors are validation errors (exit 1)"""

    def error(self, message):
        raise ValidationError(f"arguments: {message}")


class ExperimentRunner:
    """Runs one subcommand for a validated RunConfig"""

    def __init__(self, cfg: RunConfig):
        self.cfg = cfg

    def lattice(self, dims: Optional[List[int]] = None) -> Lattice:
        dims = dims if dims is not None else self.cfg.dims
        if dims is None:
            raise ValidationError("dims: required (use --dims or the config file)")
        return build_rectangular(dims, self.cfg.boundary)

    def _format(self, default: str, allowed=("json", "csv", "text")) -> str:
        fmt = self.cfg.format or default
        if fmt not in allowed:
            raise ValidationError(f"format: {fmt!r} not available here, choose from {allowed}")
        return fmt

    def _criterion_config(self, lattice: Lattice) -> CriterionConfig:
        return CriterionConfig(
            lattice=lattice,
            betas=self.cfg.betas or CRITERION_BETAS,
            step=self.cfg.step,
            sectors=self.cfg.sectors,
            factor=self.cfg.factor,
            max_dim=self.cfg.max_dense_dim,
            threads=self.cfg.threads,
        )

    # -------------------------------
    # Subcommands
    # -------------------------------
    def cmd_lattice_info(self) -> int:
        lattice = self.lattice()
        fmt = self._format("json")
        if fmt == "json":
            emit(to_json(lattice.to_dict()), self.cfg.out)
        elif fmt == "csv":
            emit(to_csv(pd.DataFrame(list(lattice.edges), columns=["a", "b"])), self.cfg.out)
        else:
            header = (
                f"lattice {lattice.label}: v={lattice.v}, {len(lattice.edges)} edges, "
                f"connected={lattice.is_connected()}"
            )
            emit(to_text(pd.DataFrame(list(lattice.edges), columns=["a", "b"]), header), self.cfg.out)
        return 0

    def cmd_spectrum(self, export_mtx: Optional[str] = None) -> int:
        lattice = self.lattice()
        if self.cfg.sector is None:
            raise ValidationError("sector: required (use --sector)")
        fmt = self._format("csv")
        op = assemble_hamiltonian(lattice, self.cfg.sector, self.cfg.max_dense_dim)
        spectrum = eigendecompose(op, self.cfg.max_dense_dim)
        if export_mtx:
            export_matrix_market(op, export_mtx, comment=f"H on sector r={op.r} of {lattice.label}")
            logger.info("SUCCESS: sector operator written to %s", export_mtx)

        table = spectra_table([spectrum])
        if fmt == "json":
            payload = {"lattice": lattice.label, "sector": spectrum.r, "eigenvalues": spectrum.eigenvalues.tolist()}
            emit(to_json(payload), self.cfg.out)
        elif fmt == "csv":
            emit(to_csv(table), self.cfg.out)
        else:
            emit(to_text(table, f"spectrum of {lattice.label}, sector {spectrum.r}"), self.cfg.out)
        return 0

    def cmd_traces(self) -> int:
        lattice = self.lattice()
        fmt = self._format("csv")
        betas = self.cfg.betas or CRITERION_BETAS
        sectors = self.cfg.sectors if self.cfg.sectors is not None else list(range(lattice.v + 1))
        table = sector_traces(lattice, betas, sectors, self.cfg.max_dense_dim, self.cfg.threads)

        step = self.cfg.step
        if step is not None:
            splits = {i: kernel_split(lattice, i, step, self.cfg.max_dense_dim) for i in sorted(set(sectors)) if i >= step}
            portions = [
                split_trace(lattice, row.sector, step, row.beta, split=splits[row.sector])
                if row.sector in splits else (np.nan, np.nan)
                for row in table.itertuples()
            ]
            table["trace_kernel"] = [p[0] for p in portions]
            table["trace_range"] = [p[1] for p in portions]

        if fmt == "json":
            totals = table.groupby("beta", sort=True)["trace"].sum()
            payload = {
                "lattice": lattice.label,
                "step": step,
                "rows": table.astype(object).where(table.notna(), None).to_dict(orient="records"),
                "totals": [{"beta": float(b), "total": float(t)} for b, t in totals.items()],
            }
            emit(to_json(payload), self.cfg.out)
        elif fmt == "csv":
            emit(to_csv(table), self.cfg.out)
        else:
            emit(to_text(table, f"sector traces of {lattice.label}"), self.cfg.out)
        return 0

    def cmd_criterion(self) -> int:
        report = evaluate_criterion(self._criterion_config(self.lattice()))
        self._emit_reports([report])
        return 0

    def cmd_sweep(self) -> int:
        dims_list = self.cfg.sweep_dims or ([self.cfg.dims] if self.cfg.dims is not None else None)
        if not dims_list:
            raise ValidationError("sweep_dims: required (use --sweep-dims or the config file)")
        reports = []
        for dims in dims_list:
            lattice = self.lattice(dims)
            logger.info("Processing %s...", lattice.label)
            report = evaluate_criterion(self._criterion_config(lattice))
            logger.info(
                "  SUCCESS %s: %d rows, criterion all pass=%s, kernel-bound counterexamples=%d",
                lattice.label, len(report.rows), report.all_pass_criterion, len(report.counterexamples),
            )
            reports.append(report)
        self._emit_reports(reports)
        return 0

    def cmd_verify(self) -> int:
        lattice = self.lattice()
        fmt = self._format("json")
        step = self.cfg.step
        if step is None:
            step = lattice.v // 10 if lattice.v % 10 == 0 else 1
        context = VerifyContext(
            lattice=lattice,
            step=step,
            betas=self.cfg.betas or VERIFY_BETAS,
            max_dim=self.cfg.max_dense_dim,
            threads=self.cfg.threads,
            inject_fault=self.cfg.inject_fault,
        )
        results = VerificationSuite().run_all(context)
        passed = all(r.passed for r in results)

        table = pd.DataFrame([r.to_dict() for r in results])
        if fmt == "json":
            payload = {"lattice": lattice.label, "step": step, "passed": passed, "checks": [r.to_dict() for r in results]}
            emit(to_json(payload), self.cfg.out)
        elif fmt == "csv":
            emit(to_csv(table), self.cfg.out)
        else:
            emit(to_text(table, f"verify {lattice.label} (step {step}): {'PASS' if passed else 'FAIL'}"), self.cfg.out)
        return 0 if passed else VerificationError.exit_code

    # -------------------------------
    # Report output
    # -------------------------------
    def _emit_reports(self, reports: List[CriterionReport]) -> None:
        fmt = self._format("json", allowed=("json", "csv", "text", "xlsx"))
        merger = ReportMerger()
        for report in reports:
            merger.add_lattice_results(report)

        if fmt == "json":
            payload = reports[0].to_dict() if len(reports) == 1 else {"reports": [r.to_dict() for r in reports]}
            emit(to_json(payload), self.cfg.out)
        elif fmt == "csv":
            merged, _, _ = merger.merge_all_results()
            emit(to_csv(merged), self.cfg.out)
        elif fmt == "text":
            emit("".join(self._report_text(r) for r in reports), self.cfg.out)
        else:
            if not self.cfg.out:
                raise ValidationError("out: xlsx output needs --out PATH")
            merger.export_to_excel(self.cfg.out)
            logger.info("SUCCESS: merged results exported to: %s", self.cfg.out)

    def _report_text(self, report: CriterionReport) -> str:
        lines = [f"{key}: {value}" for key, value in report.summary().items()]
        if report.counterexamples:
            lines.append(f"!! KERNEL-BOUND COUNTEREXAMPLE CANDIDATES: {len(report.counterexamples)}")
            lines += [f"!!   beta={c['beta']!r} i={c['sector']} margin={c['kernel_margin']!r}" for c in report.counterexamples]
        return "\n".join(lines) + "\n" + to_text(report.rows) + "\n"

    def dispatch(self, command: str, args: argparse.Namespace) -> int:
        handlers = {
            "lattice-info": self.cmd_lattice_info,
            "spectrum": lambda: self.cmd_spectrum(export_mtx=getattr(args, "export_mtx", None)),
            "traces": self.cmd_traces,
            "criterion": self.cmd_criterion,
            "verify": self.cmd_verify,
            "sweep": self.cmd_sweep,
        }
        return handlers[command]()


def build_parser() -> ArgumentParser:
    common = ArgumentParser(add_help=False)
    common.add_argument("--config", help="JSON run configuration; flags override its values")
    common.add_argument("--dims", help="side lengths, e.g. 2x5")
    common.add_argument("--boundary", help="open (default) or periodic")
    common.add_argument("--beta", action="append", type=float, help="inverse temperature (repeatable)")
    common.add_argument("--step", type=int, help="sector step k of T^{i,i-k}")
    common.add_argument("--sectors", type=int, nargs="+", help="sectors i to evaluate")
    common.add_argument("--factor", type=float, help="inequality factor (default 2)")
    common.add_argument("--format", help="json, csv, text (xlsx for criterion/sweep)")
    common.add_argument("--out", help="output path (default stdout)")
    common.add_argument("--threads", type=int, help="worker threads (overrides SPINWAVE_THREADS)")
    common.add_argument("--max-dense-dim", type=int, help="largest sector dimension handled densely")
    common.add_argument("--verbose", action="store_true", help="debug logging")

    parser = ArgumentParser(prog="main.py", description="Spin-wave sector exact diagonalization toolkit")
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("lattice-info", parents=[common], help="vertices and edges of the lattice")
    spectrum = sub.add_parser("spectrum", parents=[common], help="eigenvalues of one sector")
    spectrum.add_argument("--sector", type=int, help="sector r (number of up spins)")
    spectrum.add_argument("--export-mtx", help="also write the sector operator in Matrix Market format")
    sub.add_parser("traces", parents=[common], help="sector traces on a beta grid")
    sub.add_parser("criterion", parents=[common], help="magnetism criterion report")
    verify = sub.add_parser("verify", parents=[common], help="run the identity verification suite")
    verify.add_argument("--inject-fault", action="store_true", help="corrupt one operator entry (self-test)")
    sweep = sub.add_parser("sweep", parents=[common], help="criterion report over several lattices")
    sweep.add_argument("--sweep-dims", nargs="+", help="lattices to sweep, e.g. 2x5 1x10")
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """Main entry point"""
    try:
        args = build_parser().parse_args(argv)
        configure_logging(args.verbose)
        document = load_config_file(args.config) if args.config else {}
        overrides = {
            "dims": parse_dims(args.dims) if args.dims is not None else None,
            "boundary": args.boundary,
            "betas": args.beta,
            "step": args.step,
            "sectors": args.sectors,
            "factor": args.factor,
            "format": args.format,
            "out": args.out,
            "threads": args.threads,
            "max_dense_dim": args.max_dense_dim,
            "sector": getattr(args, "sector", None),
            "sweep_dims": [parse_dims(d) for d in args.sweep_dims] if getattr(args, "sweep_dims", None) else None,
            "inject_fault": True if getattr(args, "inject_fault", False) else None,
        }
        cfg = build_run_config(document, overrides)
        return ExperimentRunner(cfg).dispatch(args.command, args)
    except SpinWaveError as e:
        print(f"ERROR: {e}", file=sys.stderr)
        return e.exit_code


if __name__ == "__main__":
    sys.exit(main())

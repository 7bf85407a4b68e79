"""
Command runners behind the CLI.
Each runner loads its inputs, calls the library and returns a Report.
"""
import logging
import time
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

from config_system.config_loader import ConfigLoader, ToolkitConfig
from exceptions import GluingError, NonDistributiveCoveringError, PreconditionError
from logging_config import log_step_complete, log_step_start
from piecewise.algebras import covering_check, crt_glue, pairwise_reconstruction, reconstruct
from piecewise.hopf import (
    ALPHA_VARIANTS,
    ModuleAlgebraAction,
    canonical_map,
    can_inverse_from_connection,
    comodule_fibre_product,
    contraction_lattice_check,
    glue_connection,
    piecewise_principal_check,
    regular_comodule_algebra,
    sheaf_principality,
    smash_product,
    splittings,
    strong_connection_solve,
    strong_connection_verify,
    translation_map,
)
from piecewise.io import (
    DocumentKind,
    build_algebra,
    build_comodule,
    build_comodule_covering,
    build_covering,
    build_crt_request,
    build_fibre_product_legs,
    build_hopf,
    build_sheaf,
    bundled_examples,
    field_of,
    load_payload,
    matrix_rows,
    parse_document,
    rows_map,
    sheaf_document,
    validate_document,
    with_field,
)
from piecewise.lattice import L_map, R_map, distributivity_check, enumerate_antichains
from piecewise.linalg import vector_to_strings
from piecewise.reports import Report, ReportStore, compute_content_hash
from piecewise.sheaves import (
    from_covering,
    kernel_lattice_check,
    roundtrip_covering,
    roundtrip_sheaf,
    verify_flabby,
    verify_sheaf_axiom,
)
from piecewise.topology import (
    all_points,
    antichain_from_open,
    enumerate_topology,
    open_from_antichain,
    open_set_oracle,
    subbasic,
)

# the open-set distributivity check walks all antichain pairs
TOPOLOGY_DISTRIBUTIVITY_MAX_N = 4
# every open set is round-tripped through L and R and listed in the report
TOPOLOGY_ENUM_MAX_N = 5

COVERING_KINDS = (DocumentKind.COVERING, DocumentKind.CRT_GLUE)


class CommandRunner:
    """Runs one CLI command against the library and assembles its report."""

    def __init__(self, config_root: str = "./config", field: Optional[str] = None, cap: Optional[int] = None,
                 config: Optional[ToolkitConfig] = None):
        self.config = config or ConfigLoader(config_root).load_toolkit_config()
        self.field = field
        self.cap = cap if cap is not None else self.config.limits.antichain_cap
        self.logger = logging.getLogger(__name__)
        self.store = ReportStore(self.config.reports.reports_directory, self.config.reports.save_reports)

    def set_logger(self, logger: logging.Logger) -> None:
        self.logger = logger

    # plumbing -----------------------------------------------------------------------

    def _load(self, path: Union[str, Path], kinds: Tuple[DocumentKind, ...]):
        payload = with_field(load_payload(path), self.field, self.config.settings.default_field)
        document = parse_document(payload, kinds)
        return document, payload

    def _report(self, command: str, field: str, inputs: Any, arguments: Optional[Dict[str, Any]] = None) -> Report:
        digest = compute_content_hash({"command": command, "arguments": arguments or {}, "inputs": inputs})
        return Report(command=command, field=field, inputs_digest=digest)

    def _finish(self, report: Report, started: float) -> Report:
        report.timing_ms = round((time.perf_counter() - started) * 1000, 3)
        path = self.store.write_report(report)
        log_step_complete(self.logger, "Commands", report.command, "Command finished", {
            "passed": report.passed,
            "verdicts": len(report.verdicts),
            "failures": [v.anchor for v in report.failures()],
            "report_path": str(path) if path else None,
        }, duration_ms=report.timing_ms)
        return report

    def _start(self, command: str, data: Dict[str, Any]) -> float:
        log_step_start(self.logger, "Commands", command, "Command started", data)
        return time.perf_counter()

    # lattice / topology -------------------------------------------------------------

    def lattice_enum(self, n: int) -> Report:
        started = self._start("lattice enum", {"N": n})
        antichains = enumerate_antichains(n, self.cap)
        report = self._report("lattice enum", "none", {"N": n}, {"cap": self.cap})
        oracle = open_set_oracle(n)
        mismatched = [a.to_json() for a in antichains if L_map(oracle, R_map(oracle, a)) != a]
        report.add("antichain-open-set-presentation", not mismatched,
                   "L(R(l)) = l over the open sets of the coordinate topology",
                   {"antichains": mismatched[:5]} if mismatched else None)
        report.results = {"N": n, "count": len(antichains), "antichains": [a.to_json() for a in antichains]}
        return self._finish(report, started)

    def topology_enum(self, n: int) -> Report:
        started = self._start("topology enum", {"N": n})
        cap = min(self.cap, TOPOLOGY_ENUM_MAX_N)
        opens = enumerate_topology(n, cap)
        antichains = enumerate_antichains(n, cap)
        report = self._report("topology enum", "none", {"N": n}, {"cap": self.cap})
        broken = [u.to_json() for u in opens if open_from_antichain(antichain_from_open(u)) != u]
        report.add("topology-antichain-bijection", len(opens) == len(antichains) and not broken,
                   f"{len(opens)} open sets, {len(antichains)} antichains",
                   {"open_sets": broken[:5]} if broken else None)
        results: Dict[str, Any] = {
            "N": n,
            "points": [p.to_json() for p in all_points(n)],
            "subbasis": [subbasic(i, n).to_json() for i in range(1, n + 1)],
            "open_sets": [{"points": u.to_json(), "antichain": antichain_from_open(u).to_json()} for u in opens],
            "count": len(opens),
        }
        if n <= TOPOLOGY_DISTRIBUTIVITY_MAX_N:
            verdict = distributivity_check(open_set_oracle(n), self.cap)
            report.add("topology-distributive", verdict.distributive, f"{verdict.pairs_checked} antichain pairs",
                       verdict.witness.to_json() if verdict.witness else None)
        else:
            results["distributivity"] = f"skipped for N > {TOPOLOGY_DISTRIBUTIVITY_MAX_N}"
        report.results = results
        return self._finish(report, started)

    # coverings ----------------------------------------------------------------------

    def check_covering(self, path: str) -> Report:
        started = self._start("covering check", {"path": path})
        document, payload = self._load(path, COVERING_KINDS)
        algebra, morphisms = build_covering(document)
        covering = covering_check(algebra, morphisms, self.cap)
        report = self._report("covering check", document.field, payload, {"cap": self.cap})
        not_onto = [i for i, ok in enumerate(covering.surjective, start=1) if not ok]
        report.add("covering-surjective", not not_onto, witness={"maps": not_onto} if not_onto else None)
        report.add("covering-kernels-intersect-to-zero", covering.weak)
        witness = covering.distributivity.witness
        report.add("covering-distributive", covering.distributive,
                   f"{covering.distributivity.pairs_checked} antichain pairs",
                   witness.to_json() if witness else None)
        results: Dict[str, Any] = {
            "N": covering.n,
            "dim": algebra.dim,
            "piece_dims": [m.target.dim for m in morphisms],
            "kernel_dims": [k.dim for k in covering.kernels],
        }
        if covering.weak and not not_onto:
            rebuilt = reconstruct(covering)
            report.add("covering-iterated-fibre-product", rebuilt.is_isomorphism,
                       "P is the iterated fibre product of its pieces")
            results["overlap_dims"] = list(rebuilt.overlap_dims)
            pairwise, bijective = pairwise_reconstruction(covering)
            results["pairwise_pullback_dim"] = pairwise.target.dim
            results["pairwise_pullback_is_P"] = bijective
        report.results = results
        return self._finish(report, started)

    def glue_crt(self, path: str) -> Report:
        started = self._start("crt glue", {"path": path})
        document, payload = self._load(path, (DocumentKind.CRT_GLUE,))
        algebra, morphisms, opens, elements = build_crt_request(document)
        covering = covering_check(algebra, morphisms, self.cap)
        report = self._report("crt glue", document.field, payload, {"cap": self.cap})
        field = algebra.field
        if document.in_parent:
            elements = [covering.quotient_at(u).projection.apply(p) for u, p in zip(opens, elements)]
        try:
            glued = crt_glue(covering, opens, elements)
        except NonDistributiveCoveringError as exc:
            witness = covering.distributivity.witness
            report.add("covering-distributive", False, str(exc), witness.to_json() if witness else None)
            return self._finish(report, started)
        except PreconditionError as exc:
            report.add("covering-surjective", all(covering.surjective))
            report.add("covering-kernels-intersect-to-zero", covering.weak, str(exc))
            return self._finish(report, started)
        except GluingError as exc:
            report.add("crt-glue-compatible", False, str(exc))
            return self._finish(report, started)
        report.add("crt-glue-compatible", True)
        report.add("crt-glue-unique", glued.unique, "restrictions to the open sets are jointly injective")
        report.results = {
            "open_set": glued.open_set.to_json(),
            "antichain": antichain_from_open(glued.open_set).to_json(),
            "element": vector_to_strings(field, glued.element),
            "representative": vector_to_strings(field, glued.representative),
        }
        return self._finish(report, started)

    # sheaves ------------------------------------------------------------------------

    def sheaf_build(self, path: str) -> Report:
        started = self._start("sheaf build", {"path": path})
        document, payload = self._load(path, COVERING_KINDS)
        algebra, morphisms = build_covering(document)
        covering = covering_check(algebra, morphisms, self.cap)
        report = self._report("sheaf build", document.field, payload, {"cap": self.cap})
        try:
            sheaf = from_covering(covering, self.cap)
        except NonDistributiveCoveringError as exc:
            witness = covering.distributivity.witness
            report.add("covering-distributive", False, str(exc), witness.to_json() if witness else None)
            return self._finish(report, started)
        except PreconditionError as exc:
            report.add("covering-surjective", all(covering.surjective))
            report.add("covering-kernels-intersect-to-zero", covering.weak, str(exc))
            return self._finish(report, started)
        report.add("covering-distributive", True)
        flabby = verify_flabby(sheaf)
        report.add("sheaf-flabby", flabby.flabby, witness=flabby.witness_json())
        axiom = verify_sheaf_axiom(sheaf, "basis")
        report.add("sheaf-gluing-basis", axiom.holds, f"{axiom.covers_checked} covers", axiom.witness)
        report.results = {"sheaf": sheaf_document(sheaf, document.description).model_dump(mode="json")}
        return self._finish(report, started)

    def sheaf_verify(self, path: str, all_covers: bool = False) -> Report:
        started = self._start("sheaf verify", {"path": path, "all_covers": all_covers})
        document, payload = self._load(path, (DocumentKind.SHEAF,))
        sheaf = build_sheaf(document, self.cap)
        mode = "all" if all_covers else self.config.sheaf.default_axiom_mode
        report = self._report("sheaf verify", document.field, payload, {"cap": self.cap, "mode": mode})
        errors = sheaf.structure_errors()
        report.add("sheaf-restrictions-functorial", not errors, witness=errors[:5] or None)
        if errors:
            return self._finish(report, started)
        flabby = verify_flabby(sheaf)
        report.add("sheaf-flabby", flabby.flabby, witness=flabby.witness_json())
        axiom = verify_sheaf_axiom(sheaf, mode, self.config.limits.all_covers_max_n)
        report.add(f"sheaf-gluing-{mode}", axiom.holds, f"{axiom.covers_checked} covers", axiom.witness)
        if mode == "all":
            basis = verify_sheaf_axiom(sheaf, "basis")
            report.add("sheaf-gluing-modes-agree", basis.holds == axiom.holds,
                       f"basis {basis.holds}, all {axiom.holds}")
        lattice = kernel_lattice_check(sheaf)
        report.add("sheaf-kernel-lattice", lattice.holds, witness=lattice.witness)
        report.results = {"N": sheaf.n, "open_sets": len(sheaf.open_sets),
                          "global_dim": sheaf.global_sections().dim}
        return self._finish(report, started)

    def sheaf_roundtrip(self, path: str) -> Report:
        started = self._start("sheaf roundtrip", {"path": path})
        document, payload = self._load(path, COVERING_KINDS + (DocumentKind.SHEAF,))
        report = self._report("sheaf roundtrip", document.field, payload, {"cap": self.cap})
        if document.kind == DocumentKind.SHEAF:
            verdict = roundtrip_sheaf(build_sheaf(document, self.cap), self.cap)
            report.add("sheaf-covering-roundtrip", verdict.holds, witness=verdict.failures or None)
        else:
            algebra, morphisms = build_covering(document)
            covering = covering_check(algebra, morphisms, self.cap)
            if not covering.distributive:
                witness = covering.distributivity.witness
                report.add("covering-distributive", False, "only distributive coverings define a sheaf",
                           witness.to_json() if witness else None)
                return self._finish(report, started)
            verdict = roundtrip_covering(covering, self.cap)
            report.add("covering-sheaf-roundtrip", verdict.holds, witness=verdict.failures or None)
            if covering.n <= self.config.limits.all_covers_max_n:
                axiom = verify_sheaf_axiom(from_covering(covering, self.cap), "all",
                                           self.config.limits.all_covers_max_n)
                report.add("sheaf-gluing-all", axiom.holds, f"{axiom.covers_checked} covers", axiom.witness)
        return self._finish(report, started)

    # Hopf ---------------------------------------------------------------------------

    def hopf_verify(self, path: str) -> Report:
        started = self._start("hopf verify", {"path": path})
        kinds = (DocumentKind.HOPF, DocumentKind.COMODULE, DocumentKind.SMASH)
        document, payload = self._load(path, kinds)
        field = field_of(document)
        report = self._report("hopf verify", document.field, payload)
        hopf = build_hopf(field, document.hopf, validate=False)
        errors = hopf.axiom_errors()
        report.add("hopf-axioms", not errors, witness=errors or None)
        results: Dict[str, Any] = {"hopf_dim": hopf.dim}
        if errors:
            return self._finish(report, started)
        if document.kind == DocumentKind.COMODULE:
            comodule = build_comodule(field, hopf, document.comodule, validate=False)
            errors = comodule.axiom_errors()
            report.add("comodule-algebra-axioms", not errors, witness=errors or None)
            if not errors:
                results.update(dim=comodule.dim, coinvariants_dim=comodule.coinvariants.dim,
                               galois=canonical_map(comodule).galois)
        elif document.kind == DocumentKind.SMASH:
            base = build_algebra(field, document.smash.base)
            action = ModuleAlgebraAction(base, hopf, rows_map(field, document.smash.action, base.dim,
                                                              hopf.dim * base.dim))
            errors = action.axiom_errors()
            report.add("module-algebra-axioms", not errors, witness=errors or None)
            if not errors:
                smash = smash_product(action)
                errors = smash.comodule.axiom_errors()
                report.add("smash-comodule-algebra-axioms", not errors, witness=errors or None)
                results.update(dim=smash.comodule.dim, coinvariants_dim=smash.comodule.coinvariants.dim)
        report.results = results
        return self._finish(report, started)

    def _comodule_of(self, document):
        field = field_of(document)
        hopf = build_hopf(field, document.hopf)
        if document.kind == DocumentKind.SMASH:
            base = build_algebra(field, document.smash.base)
            action = rows_map(field, document.smash.action, base.dim, hopf.dim * base.dim)
            return smash_product(ModuleAlgebraAction(base, hopf, action)).comodule
        return build_comodule(field, hopf, document.comodule)

    def hopf_principal(self, path: str) -> Report:
        started = self._start("hopf principal", {"path": path})
        document, payload = self._load(path, (DocumentKind.HOPF, DocumentKind.COMODULE, DocumentKind.SMASH))
        if document.kind == DocumentKind.HOPF:
            comodule = regular_comodule_algebra(build_hopf(field_of(document), document.hopf))
        else:
            comodule = self._comodule_of(document)
        report = self._report("hopf principal", document.field, payload)
        result = strong_connection_solve(comodule)
        report.add("strong-connection-feasibility", result.feasible, "feasible" if result.feasible else "infeasible",
                   {"inconsistent_block": result.inconsistent_block} if not result.feasible else None)
        results: Dict[str, Any] = {
            "dim": comodule.dim,
            "hopf_dim": comodule.hopf.dim,
            "coinvariants_dim": comodule.coinvariants.dim,
            "unknowns": result.unknowns,
            "equations": result.equations,
        }
        if result.feasible:
            connection = result.connection
            verdict = strong_connection_verify(comodule, connection.map)
            report.add("strong-connection-axioms", verdict.verified, witness=verdict.failures or None)
            canonical = canonical_map(comodule)
            inverse = can_inverse_from_connection(connection, canonical)
            report.add("canonical-map-inverse", inverse.two_sided, "two-sided inverse of can built from the connection")
            tau = translation_map(connection, canonical)
            report.add("translation-map", tau.matches_connection and tau.splits_canonical)
            checks = splittings(connection).checks()
            failed = [name for name, ok in checks.items() if not ok]
            report.add("connection-splittings", not failed, witness=failed or None)
            results["connection"] = matrix_rows(connection.map)
            results["galois"] = canonical.galois
        report.results = results
        return self._finish(report, started)

    def hopf_glue(self, path: str) -> Report:
        started = self._start("hopf glue", {"path": path})
        document, payload = self._load(path, (DocumentKind.COMODULE_FIBRE_PRODUCT,))
        pi12, pi21 = build_fibre_product_legs(document)
        report = self._report("hopf glue", document.field, payload, {"variants": list(ALPHA_VARIANTS)})
        pieces = [strong_connection_solve(leg.source) for leg in (pi12, pi21)]
        report.add("pieces-principal", all(r.feasible for r in pieces),
                   witness=[r.inconsistent_block for r in pieces if not r.feasible] or None)
        product = comodule_fibre_product(pi12, pi21)
        direct = strong_connection_solve(product.comodule)
        results: Dict[str, Any] = {"dim": product.comodule.dim, "piece_dims": [pi12.source.dim, pi21.source.dim],
                                   "overlap_dim": pi12.target.dim, "direct_feasible": direct.feasible}
        if all(r.feasible for r in pieces):
            verified = []
            for variant in ALPHA_VARIANTS:
                anchor = f"glued-connection-axioms[variant={variant}]"
                try:
                    glued = glue_connection(pi12, pi21, pieces[0].connection, pieces[1].connection, variant)
                except (GluingError, PreconditionError) as exc:
                    report.add(anchor, False, str(exc))
                    verified.append(False)
                    continue
                report.add(anchor, glued.verified, witness=glued.verdict.failures or None)
                verified.append(glued.verified)
                results[f"connection[variant={variant}]"] = matrix_rows(glued.connection.map)
            report.add("glued-verdict-agrees", direct.feasible == all(verified),
                       f"direct solve on the fibre product is {'feasible' if direct.feasible else 'infeasible'}")
        report.results = results
        return self._finish(report, started)

    def hopf_piecewise(self, path: str, variant: Optional[int] = None) -> Report:
        started = self._start("hopf piecewise", {"path": path})
        document, payload = self._load(path, (DocumentKind.COMODULE_COVERING,))
        comodule, morphisms, trivializations = build_comodule_covering(document)
        variant = self.config.hopf.default_alpha_variant if variant is None else variant
        report = self._report("hopf piecewise", document.field, payload, {"cap": self.cap, "variant": variant})
        outcome = piecewise_principal_check(comodule, morphisms, trivializations, variant, self.cap)
        blocked = [r.inconsistent_block for r in outcome.pieces if not r.feasible]
        report.add("pieces-principal", outcome.pieces_principal, witness=blocked or None)
        report.add("piecewise-verdicts-agree", outcome.verdicts_agree,
                   f"direct={outcome.direct.feasible}, glued={outcome.glued_principal}, "
                   f"pieces={outcome.pieces_principal}",
                   outcome.glued_failures or None)
        if outcome.pieces_principal:
            report.add("glued-connection-axioms", outcome.glued_principal, witness=outcome.glued_failures or None)
        results: Dict[str, Any] = {"N": len(morphisms), "dim": comodule.dim,
                                   "pieces": [r.feasible for r in outcome.pieces],
                                   "direct_feasible": outcome.direct.feasible}
        if outcome.direct.feasible:
            report.add("coinvariant-surjectivity", all(outcome.coinvariant_surjective),
                       witness=[i for i, ok in enumerate(outcome.coinvariant_surjective, start=1) if not ok] or None)
            report.add("coinvariant-covering-agrees", bool(outcome.coverings_agree),
                       f"covering={outcome.covering}, coinvariant covering={outcome.coinvariant_covering}")
            contraction = contraction_lattice_check(outcome.direct.connection, [m.kernel() for m in morphisms])
            report.add("ideal-contraction-lattice", contraction.holds, witness=contraction.failures or None)
            if outcome.covering:
                try:
                    sheaf = sheaf_principality(comodule, morphisms, self.cap)
                except PreconditionError as exc:
                    results["sheaf_principality"] = f"skipped: {exc}"
                else:
                    report.add("sheaf-principality-propagates", sheaf.propagates and sheaf.colinear_restrictions,
                               f"{sum(sheaf.principal.values())} of {len(sheaf.principal)} sections principal")
        if outcome.piecewise_trivial is not None:
            report.add("piecewise-trivial", outcome.piecewise_trivial,
                       witness=[i for i, ok in enumerate(outcome.trivializations, start=1) if not ok] or None)
        report.results = results
        return self._finish(report, started)

    # bundled inputs -----------------------------------------------------------------

    def data_validate(self, paths: Sequence[str] = ()) -> Report:
        targets: List[Path] = [Path(p) for p in paths] or bundled_examples()
        started = self._start("data validate", {"files": len(targets)})
        report = self._report("data validate", self.field or "document", [str(p.name) for p in targets])
        for target in targets:
            errors = validate_document(with_field(load_payload(target), self.field,
                                                  self.config.settings.default_field))
            report.add(f"document-format[{target.name}]", not errors, witness=errors or None)
        report.results = {"files": [str(p) for p in targets]}
        return self._finish(report, started)

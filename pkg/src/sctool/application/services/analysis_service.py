"""
Analysis service.

One method per subcommand: loads inputs through the repository, runs the
domain algorithms and packs the outcome into a ReportDTO.
Author: DmitrTRC
"""

import logging
from pathlib import Path
from typing import Optional

from sctool.application.dto import MisrepSpec, ReportDTO, RunConfig
from sctool.domain.cc import (
    ApprovalModel,
    MatrixModel,
    MisrepModel,
    PositionalModel,
    cc_optimal,
)
from sctool.domain.enums import Command, MisrepKind, OracleCommand
from sctool.domain.exceptions import (
    ConfigurationError,
    EvenElectorateError,
    NotSingleCrossingError,
)
from sctool.domain.majority import (
    majority_margins,
    representative_voter,
    sample_condorcet_check,
    strict_majority,
)
from sctool.domain.models import Profile, Tree, reduce_profile
from sctool.domain.oracle import (
    cc_brute_force,
    classical_sc_check,
    enumerate_labeled_trees,
    recognize_exhaustive,
)
from sctool.domain.sctree import (
    NoCutWitness,
    RecognitionResult,
    classify_line,
    collapsible_edges,
    generate_profile,
    recognize,
    verify_single_crossing,
)
from sctool.infrastructure.exporters.text_exporter import ProfileTextExporter
from sctool.infrastructure.repositories.base import InputRepository

logger = logging.getLogger(__name__)


class AnalysisService:
    """Service running sctool analyses."""

    def __init__(self, repository: InputRepository) -> None:
        """
        Initialize analysis service.

        Args:
            repository: Repository for input files
        """
        self.repository = repository

    def run(self, config: RunConfig) -> ReportDTO:
        """
        Dispatch a run configuration to its subcommand.

        Args:
            config: Validated run configuration

        Returns:
            Report of the subcommand
        """
        handlers = {
            Command.VERIFY: self.verify,
            Command.RECOGNIZE: self.recognize,
            Command.GENERATE: self.generate,
            Command.MAJORITY: self.majority,
            Command.CC: self.cc,
            Command.CHECK_DOMAIN: self.check_domain,
        }
        if config.command == Command.ORACLE:
            return self.oracle(config)
        return handlers[config.command](config)

    # ═══════════════════════════════════════════════════════════
    # Input Helpers
    # ═══════════════════════════════════════════════════════════

    def _profile(self, config: RunConfig) -> Profile:
        if config.profile_path is None:
            raise ConfigurationError("A profile file is required", field="profile")
        return self.repository.load_profile(config.profile_path)

    def _tree_for(self, config: RunConfig, profile: Profile) -> Tree:
        if config.tree_path is None:
            raise ConfigurationError("A tree file is required", field="tree")
        return self.repository.load_tree(config.tree_path, profile.voter_count)

    def build_model(self, spec: MisrepSpec, profile: Profile) -> MisrepModel:
        """
        Build the misrepresentation model a --misrep flag names.

        Args:
            spec: Parsed --misrep value
            profile: Profile the model applies to (one matrix row or approval
                line per voter line)

        Returns:
            MisrepModel (validated later by the algorithms)
        """
        if spec.kind == MisrepKind.BORDA:
            return PositionalModel.borda(profile.m)
        if spec.kind == MisrepKind.POSITIONAL:
            assert spec.scores is not None
            return PositionalModel(scores=spec.scores)

        path: Optional[Path] = spec.path
        assert path is not None
        if spec.kind == MisrepKind.MATRIX:
            return MatrixModel(rows=self.repository.load_matrix(path, profile))
        return ApprovalModel(approved=self.repository.load_approval(path, profile))

    # ═══════════════════════════════════════════════════════════
    # Trees
    # ═══════════════════════════════════════════════════════════

    def verify(self, config: RunConfig) -> ReportDTO:
        """Check a profile against a given tree."""
        profile = self._profile(config)
        tree = self._tree_for(config, profile)
        verdict = verify_single_crossing(profile, tree)

        if isinstance(verdict, NoCutWitness):
            logger.info("Not single-crossing: pair %d,%d", verdict.a, verdict.b)
            return ReportDTO(
                command=Command.VERIFY.value,
                positive=False,
                data={
                    "single_crossing": False,
                    "witness": verdict.to_dict(profile.names),
                },
                result=verdict,
                names=profile.names,
            )

        collapsible = collapsible_edges(profile, tree, verdict)
        logger.info("Single-crossing, %d collapsible edges", len(collapsible))
        return ReportDTO(
            command=Command.VERIFY.value,
            positive=True,
            data={
                "single_crossing": True,
                **verdict.to_dict(),
                "collapsible_edges": [list(edge) for edge in collapsible],
            },
            result=verdict,
        )

    def recognize(self, config: RunConfig) -> ReportDTO:
        """Find the minimal tree of a profile, if any."""
        profile = self._profile(config)
        result = recognize(profile)

        if not isinstance(result, RecognitionResult):
            logger.info("Recognition stuck with %d classes", len(result.classes))
            return ReportDTO(
                command=Command.RECOGNIZE.value,
                positive=False,
                data=result.to_dict(),
                result=result,
            )

        line = classify_line(result)
        logger.info("Recognized: %d classes", result.reduced.r)
        return ReportDTO(
            command=Command.RECOGNIZE.value,
            positive=True,
            data={**result.to_dict(), "line": line.to_dict()},
            result=result,
        )

    def generate(self, config: RunConfig) -> ReportDTO:
        """Build the witness profile of a tree, optionally writing it to a file."""
        if config.tree_path is None:
            raise ConfigurationError("A tree file is required", field="tree")
        tree = self.repository.load_tree(config.tree_path)
        generated = generate_profile(tree)

        exporter = ProfileTextExporter()
        if config.output_path is not None:
            exporter.write(generated, config.output_path)

        return ReportDTO(
            command=Command.GENERATE.value,
            positive=True,
            data=generated.to_dict(),
            result=generated,
            text=exporter.render(generated),
        )

    # ═══════════════════════════════════════════════════════════
    # Majority
    # ═══════════════════════════════════════════════════════════

    def majority(self, config: RunConfig) -> ReportDTO:
        """Margins, strict relation and representative voter of a profile."""
        profile = self._profile(config)
        margins = majority_margins(profile)
        relation = strict_majority(margins)

        representative: Optional[int] = None
        try:
            representative = representative_voter(profile)
            status = "found" if representative is not None else "not_found"
        except EvenElectorateError:
            status = "even_electorate"

        data = {
            **margins.to_dict(),
            **relation.to_dict(),
            "representative": {"status": status, "voter": representative},
        }
        positive = relation.transitive and status != "not_found"
        logger.info("Majority: transitive=%s voter=%s", relation.transitive, status)
        return ReportDTO(
            command=Command.MAJORITY.value,
            positive=positive,
            data=data,
            result=(margins, relation),
        )

    def check_domain(self, config: RunConfig) -> ReportDTO:
        """Sample multiplicities over the distinct orders of a profile."""
        profile = self._profile(config)
        domain = reduce_profile(profile.expanded())
        assert config.seed is not None
        report = sample_condorcet_check(
            domain, trials=config.trials, max_weight=config.max_weight, seed=config.seed
        )
        logger.info("Sampling: %d/%d failures", report.failures, report.trials)
        return ReportDTO(
            command=Command.CHECK_DOMAIN.value,
            positive=report.passed,
            data=report.to_dict(),
            result=report,
        )

    # ═══════════════════════════════════════════════════════════
    # Committees
    # ═══════════════════════════════════════════════════════════

    def cc(self, config: RunConfig) -> ReportDTO:
        """Optimal Chamberlin-Courant committee on a single-crossing tree."""
        profile = self._profile(config)
        tree = self._tree_for(config, profile)
        model = self.build_model(config.misrep, profile)
        assert config.k is not None

        try:
            result = cc_optimal(
                profile, tree, config.k, model, config.mode, config.anchor
            )
        except NotSingleCrossingError as e:
            logger.info("Committee refused: %s", e.message)
            return ReportDTO(
                command=Command.CC.value,
                positive=False,
                data={"single_crossing": False, "error": e.message, **e.details},
                result=e,
            )

        logger.info("Committee found: phi=%s", result.phi)
        return ReportDTO(
            command=Command.CC.value,
            positive=True,
            data=result.to_dict(),
            result=result,
        )

    # ═══════════════════════════════════════════════════════════
    # Oracles
    # ═══════════════════════════════════════════════════════════

    def oracle(self, config: RunConfig) -> ReportDTO:
        """Dispatch an `oracle` subcommand."""
        handlers = {
            OracleCommand.TREES: self.oracle_trees,
            OracleCommand.RECOGNIZE: self.oracle_recognize,
            OracleCommand.CC: self.oracle_cc,
            OracleCommand.CLASSICAL: self.oracle_classical,
        }
        assert config.oracle_command is not None
        return handlers[config.oracle_command](config)

    @staticmethod
    def _oracle_name(sub: OracleCommand) -> str:
        return f"{Command.ORACLE.value} {sub.value}"

    def oracle_trees(self, config: RunConfig) -> ReportDTO:
        """List every labeled tree on n vertices."""
        assert config.vertices is not None
        trees = enumerate_labeled_trees(config.vertices)
        listed = [tree.to_dict() for tree in trees]
        logger.info("Enumerated %d labeled trees", len(listed))
        return ReportDTO(
            command=self._oracle_name(OracleCommand.TREES),
            positive=True,
            data={"n": config.vertices, "count": trees.count, "trees": listed},
            result=trees,
        )

    def oracle_recognize(self, config: RunConfig) -> ReportDTO:
        """Exhaustive recognition over every tree on the distinct orders."""
        result = recognize_exhaustive(self._profile(config))
        return ReportDTO(
            command=self._oracle_name(OracleCommand.RECOGNIZE),
            positive=result.single_crossing,
            data=result.to_dict(),
            result=result,
        )

    def oracle_cc(self, config: RunConfig) -> ReportDTO:
        """Committee optimum by trying every k-subset."""
        profile = self._profile(config)
        model = self.build_model(config.misrep, profile)
        assert config.k is not None
        result = cc_brute_force(profile, config.k, model, config.mode)
        return ReportDTO(
            command=self._oracle_name(OracleCommand.CC),
            positive=True,
            data=result.to_dict(),
            result=result,
        )

    def oracle_classical(self, config: RunConfig) -> ReportDTO:
        """Search for a voter ordering on which the profile is single-crossing."""
        ordering = classical_sc_check(self._profile(config))
        return ReportDTO(
            command=self._oracle_name(OracleCommand.CLASSICAL),
            positive=ordering is not None,
            data={
                "classical": ordering is not None,
                "ordering": list(ordering) if ordering is not None else None,
            },
            result=ordering,
        )

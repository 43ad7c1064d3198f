"""
Majority commands - majority and check-domain.

Author: DmitrTRC
"""

from sctool.application.dto import ReportDTO, RunConfig
from sctool.presentation.cli.commands.base import BaseCommand


class MajorityCommand(BaseCommand):
    """Margins, strict relation and representative voter."""

    def analyse(self, config: RunConfig) -> ReportDTO:
        """Compute the majority report."""
        return self.service.majority(config)

    def render(self, report: ReportDTO, config: RunConfig) -> None:
        """Show margins and the relation."""
        margins, relation = report.result
        representative = report.data["representative"]
        self.formatter.show_majority(
            margins, relation, representative["status"], representative["voter"]
        )


class CheckDomainCommand(BaseCommand):
    """Sample multiplicity vectors over the orders of a profile."""

    def analyse(self, config: RunConfig) -> ReportDTO:
        """Run the sampling check."""
        return self.service.check_domain(config)

    def render(self, report: ReportDTO, config: RunConfig) -> None:
        """Show failures and the first counterexample."""
        self.formatter.show_condorcet(report.result)

"""
Committee command - optimal Chamberlin-Courant committees.

Author: DmitrTRC
"""

from sctool.application.dto import ReportDTO, RunConfig
from sctool.domain.cc import CCResult
from sctool.presentation.cli.commands.base import BaseCommand


class CommitteeCommand(BaseCommand):
    """Optimal committee on a single-crossing tree."""

    def analyse(self, config: RunConfig) -> ReportDTO:
        """Run the committee program."""
        return self.service.cc(config)

    def render(self, report: ReportDTO, config: RunConfig) -> None:
        """Show phi, committee and assignment."""
        if isinstance(report.result, CCResult):
            self.formatter.show_committee(report.result)
            return
        self.formatter.verdict(False, str(report.data.get("error", "no committee")))

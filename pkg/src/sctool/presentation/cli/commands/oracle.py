"""
Oracle command - brute-force counterparts of the fast algorithms.

Author: DmitrTRC
"""

from sctool.application.dto import ReportDTO, RunConfig
from sctool.domain.enums import OracleCommand
from sctool.presentation.cli.commands.base import BaseCommand


class OracleCheckCommand(BaseCommand):
    """Dispatches `oracle trees|recognize|cc|classical`."""

    def analyse(self, config: RunConfig) -> ReportDTO:
        """Run the selected oracle."""
        return self.service.oracle(config)

    def render(self, report: ReportDTO, config: RunConfig) -> None:
        """Show the oracle outcome."""
        sub = config.oracle_command
        if sub == OracleCommand.TREES:
            assert config.vertices is not None
            self.formatter.show_trees(config.vertices, list(report.result))
        elif sub == OracleCommand.RECOGNIZE:
            self.formatter.show_exhaustive(report.result)
        elif sub == OracleCommand.CC:
            self.formatter.show_committee(report.result)
        else:
            self.formatter.show_classical(report.result)

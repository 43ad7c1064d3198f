"""
Tree commands - verify, recognize and generate.

Author: DmitrTRC
"""

from sctool.application.dto import ReportDTO, RunConfig
from sctool.domain.sctree import NoCutWitness, RecognitionResult, classify_line
from sctool.presentation.cli.commands.base import BaseCommand


class VerifyCommand(BaseCommand):
    """Check a profile against a given tree."""

    def analyse(self, config: RunConfig) -> ReportDTO:
        """Verify cuts for every pair."""
        return self.service.verify(config)

    def render(self, report: ReportDTO, config: RunConfig) -> None:
        """Show the cut table or the witness."""
        if isinstance(report.result, NoCutWitness):
            self.formatter.show_verify(None, report.result, report.names)
        else:
            self.formatter.show_verify(report.result, None, report.names)
        collapsible = report.data.get("collapsible_edges") or []
        if collapsible:
            edges = ", ".join(f"{u}-{v}" for u, v in collapsible)
            self.console.print(f"Collapsible edges: {edges}", style="yellow")


class RecognizeCommand(BaseCommand):
    """Find the minimal tree of a profile."""

    def analyse(self, config: RunConfig) -> ReportDTO:
        """Run recognition."""
        return self.service.recognize(config)

    def render(self, report: ReportDTO, config: RunConfig) -> None:
        """Show the tree or the stuck classes."""
        if isinstance(report.result, RecognitionResult):
            self.formatter.show_recognition(report.result, classify_line(report.result))
        else:
            self.formatter.show_not_single_crossing(report.result)


class GenerateCommand(BaseCommand):
    """Build the witness profile of a tree."""

    def analyse(self, config: RunConfig) -> ReportDTO:
        """Generate the profile."""
        return self.service.generate(config)

    def render(self, report: ReportDTO, config: RunConfig) -> None:
        """Print the profile file, or where it was written."""
        if config.output_path is not None:
            self.formatter.verdict(True, f"profile written to {config.output_path}")
            return
        self.console.out(report.text or "", end="", highlight=False)

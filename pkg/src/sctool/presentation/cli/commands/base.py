"""
Base command class for CLI.

Author: DmitrTRC
"""

from abc import ABC, abstractmethod
from typing import Optional

from rich.console import Console

from sctool.application.dto import ReportDTO, RunConfig
from sctool.application.services.analysis_service import AnalysisService
from sctool.domain.enums import ExitCode
from sctool.infrastructure.config.settings import get_settings
from sctool.infrastructure.exporters.json_exporter import JSONExporter
from sctool.infrastructure.repositories.base import InputRepository
from sctool.infrastructure.repositories.file_repository import FileRepository
from sctool.presentation.cli.formatters import ReportFormatter


class BaseCommand(ABC):
    """Abstract base class for CLI commands."""

    def __init__(
        self,
        console: Optional[Console] = None,
        repository: Optional[InputRepository] = None,
    ) -> None:
        """
        Initialize command.

        Args:
            console: Console for reports (standard output by default)
            repository: Input repository (files by default)
        """
        self.settings = get_settings()
        self.console = console or Console(
            no_color=not self.settings.enable_colors, highlight=False
        )
        self.formatter = ReportFormatter(self.console)

        # Initialize services
        self.repository = repository or FileRepository()
        self.service = AnalysisService(self.repository)

    def execute(self, config: RunConfig) -> int:
        """
        Execute the command.

        Returns:
            Exit code (0 positive finding, 1 negative finding)
        """
        report = self.analyse(config)
        if config.is_json:
            exporter = JSONExporter(self.settings)
            self.console.out(exporter.render(report.data), highlight=False)
        else:
            self.render(report, config)
        return int(ExitCode.POSITIVE if report.positive else ExitCode.NEGATIVE)

    @abstractmethod
    def analyse(self, config: RunConfig) -> ReportDTO:
        """Run the analysis behind the command."""
        pass

    @abstractmethod
    def render(self, report: ReportDTO, config: RunConfig) -> None:
        """Print a report as text."""
        pass

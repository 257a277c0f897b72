"""CLI jobs: classification and the full calculus pipeline, with report rendering."""

from .commands import COMMANDS, cmd_classify, cmd_pipeline, run_job
from .config import JobConfig
from .report import cocycle_report, conventions, render, render_text, write_report

__all__ = [
    'COMMANDS',
    'JobConfig',
    'cmd_classify',
    'cmd_pipeline',
    'cocycle_report',
    'conventions',
    'render',
    'render_text',
    'run_job',
    'write_report',
]

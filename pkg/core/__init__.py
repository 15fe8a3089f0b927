__all__ = ["Environment", "RunConfig", "RunReport", "Table", "ReportWriter", "Runner", "Constructor"]


from core.environment import Environment
from core.config import RunConfig
from core.report import RunReport, Table
from core.writer import ReportWriter
from core.runner import Runner
from core.constructor import Constructor

"""
trikit constants for file formats and the command line
"""


class FileKeywords:
    """Keywords of the orders and graph text formats"""

    COMMENT = "#"
    OUTER = "outer"
    ROTATION = "rotation"
    FACES = "faces"

    @classmethod
    def get_all_keywords(cls) -> list[str]:
        """Get the keywords that may start a graph file line"""
        return [cls.OUTER, cls.ROTATION, cls.FACES]


class ExitCode:
    """Process exit codes of the trikit command"""

    OK = 0
    FAILURE = 1      # validation or property failure, witness on stderr
    USAGE = 2        # parse or usage error


class OutputFormat:
    """Output formats accepted by --format"""

    TEXT = "text"
    JSON = "json"
    DOT = "dot"

    @classmethod
    def get_all_formats(cls) -> list[str]:
        return [cls.TEXT, cls.JSON, cls.DOT]


CONFIG_FILE_NAME = "trikit.config.json"

# Brute-force search vertex cap
DEFAULT_SEARCH_CAP = 7

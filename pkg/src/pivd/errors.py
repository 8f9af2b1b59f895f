class ResourceLimitError(RuntimeError):
    """An exhaustive routine was asked to handle an input beyond its guard."""


class ParseError(ValueError):
    """Malformed graph or instance file.

    ``line`` is 1-based for text formats; ``offset`` is a byte offset for
    graph6 payloads.
    """

    def __init__(self, message: str, line: int | None = None, offset: int | None = None):
        where = []
        if line is not None:
            where.append(f"line {line}")
        if offset is not None:
            where.append(f"byte {offset}")
        super().__init__(f"{message} ({', '.join(where)})" if where else message)
        self.line = line
        self.offset = offset

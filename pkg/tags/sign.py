__all__ = ["Sign"]


from enum import IntEnum


class Sign(IntEnum):
    """Branch of the induced Gauss maps and of the one-sided sections."""

    PLUS = 1
    MINUS = -1

    @classmethod
    def parse(cls, text: str) -> "Sign":
        """Parses ``"+"``, ``"-"``, ``"plus"`` or ``"minus"``.

        Raises:
            ValueError: If the text names no branch.
        """
        lookup = {"+": cls.PLUS, "plus": cls.PLUS, "-": cls.MINUS, "minus": cls.MINUS}
        try:
            return lookup[text.strip().lower()]
        except KeyError:
            raise ValueError(f"unknown sign: {text!r}") from None

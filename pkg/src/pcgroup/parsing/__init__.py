from pcgroup.parsing.formatter import format_presentation
from pcgroup.parsing.parser import load_presentation_file, parse_presentation, parse_word

__all__ = ["format_presentation", "load_presentation_file", "parse_presentation", "parse_word"]

"""Document storage for objlin."""

from src.storage.document_manager import (
    DocumentManager,
    parse_document,
    parse_text,
    serialize_document,
)

__all__ = ["DocumentManager", "parse_document", "parse_text", "serialize_document"]

"""Base class for JSON-backed documents.

Curve specs, pack plans and settings are all small JSON objects whose keys map
one-to-one onto dataclass fields. This module provides the shared machinery:

- Type-aware parsing driven by the dataclass field annotations
- Nested documents and lists of documents
- A ``validate()`` hook run after every load
- File I/O with explicit encoding

Every failure is reported as a DocumentError naming the offending field.
"""

import json
import logging
from abc import ABC
from dataclasses import MISSING, dataclass, fields
from typing import (
    Any,
    Dict,
    List,
    Type,
    TypeVar,
    Union,
    get_args,
    get_origin,
    get_type_hints,
)

from .enums import CheckStrictness
from .errors import DocumentError

logger = logging.getLogger(__name__)

T = TypeVar("T", bound="JsonDocument")


@dataclass
class JsonDocument(ABC):
    """Base class for dataclasses stored as flat JSON objects.

    Usage:
        @dataclass
        class Step(JsonDocument):
            a: int = 1
            b: int = 1

            def validate(self) -> None:
                if self.a < 1:
                    raise DocumentError("must be >= 1", field="a")

        step = Step.from_str('{"a": 2, "b": 3}')
        step.to_json_str()
    """

    def validate(self) -> None:
        """Check document invariants. Subclasses raise DocumentError."""

    @classmethod
    def from_dict(
        cls: Type[T],
        data: Dict[str, Any],
        strictness: CheckStrictness = CheckStrictness.STRICT,
    ) -> T:
        """Create instance from dictionary data.

        Args:
            data: Dictionary containing the data
            strictness: Policy for keys that match no field

        Returns:
            Validated instance of the class

        Raises:
            DocumentError: If a field is missing, mistyped or invalid
        """
        if not isinstance(data, dict):
            raise DocumentError(
                f"expected a JSON object, got {type(data).__name__}",
                field=cls.__name__,
            )

        class_fields = {f.name: f for f in fields(cls) if f.init}
        hints = get_type_hints(cls)

        unknown = sorted(set(data) - set(class_fields))
        if unknown:
            message = f"unknown keys {unknown} in {cls.__name__}"
            if strictness == CheckStrictness.STRICT:
                raise DocumentError(message, field=unknown[0])
            elif strictness == CheckStrictness.LENIENT:
                logger.warning(message)

        kwargs = {}
        for field_name, field_obj in class_fields.items():
            if field_name in data:
                kwargs[field_name] = cls._parse_field_value(
                    data[field_name], hints[field_name], field_name, strictness
                )
            elif field_obj.default is MISSING and field_obj.default_factory is MISSING:
                raise DocumentError("required field is missing", field=field_name)

        instance = cls(**kwargs)
        instance.validate()
        return instance

    @classmethod
    def _parse_field_value(
        cls,
        value: Any,
        field_type: Any,
        field_name: str,
        strictness: CheckStrictness,
    ) -> Any:
        """Parse a field value based on its type annotation.

        Args:
            value: The raw JSON value
            field_type: The annotated type
            field_name: Field name used in error messages
            strictness: Passed through to nested documents

        Returns:
            Parsed value
        """
        origin = get_origin(field_type)

        if origin is Union:
            args = [arg for arg in get_args(field_type) if arg is not type(None)]
            if value is None:
                return None
            if len(args) == 1:
                return cls._parse_field_value(value, args[0], field_name, strictness)
            return value

        if origin is list or origin is List:
            if not isinstance(value, list):
                raise DocumentError(
                    f"expected a list, got {type(value).__name__}", field=field_name
                )
            args = get_args(field_type)
            if not args:
                return value
            return [
                cls._parse_field_value(item, args[0], f"{field_name}[{i}]", strictness)
                for i, item in enumerate(value)
            ]

        if _is_json_document_type(field_type):
            try:
                return field_type.from_dict(value, strictness)
            except DocumentError as e:
                if e.field is None:
                    raise
                raise DocumentError(e.detail, field=f"{field_name}.{e.field}") from e

        if field_type is int:
            if isinstance(value, bool) or not isinstance(value, int):
                raise DocumentError(f"expected an integer, got {value!r}", field_name)
            return value

        if field_type is str:
            if not isinstance(value, str):
                raise DocumentError(f"expected a string, got {value!r}", field_name)
            return value

        return value

    @classmethod
    def from_str(
        cls: Type[T],
        json_string: str,
        strictness: CheckStrictness = CheckStrictness.STRICT,
    ) -> T:
        """Parse from JSON string.

        Args:
            json_string: JSON content as string
            strictness: Policy for unknown keys

        Returns:
            Validated instance of the class

        Raises:
            DocumentError: If the JSON string is invalid or fails validation
        """
        try:
            data = json.loads(json_string)
        except json.JSONDecodeError as e:
            raise DocumentError(f"Invalid JSON format: {e}") from e

        return cls.from_dict(data, strictness)

    @classmethod
    def from_file(
        cls: Type[T],
        file_path: str,
        strictness: CheckStrictness = CheckStrictness.STRICT,
        encoding: str = "utf-8",
    ) -> T:
        """Parse from JSON file.

        Args:
            file_path: Path to JSON file
            strictness: Policy for unknown keys
            encoding: File encoding (default: utf-8)

        Returns:
            Validated instance of the class

        Raises:
            DocumentError: If the file cannot be read, is not JSON or fails validation
        """
        try:
            with open(file_path, "r", encoding=encoding) as f:
                content = f.read()
        except OSError as e:
            raise DocumentError(f"Cannot read {file_path}: {e}") from e

        logger.debug(f"Loading {cls.__name__} from {file_path}")
        return cls.from_str(content, strictness)

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary format."""
        result = {}
        for field_obj in fields(self):
            if not field_obj.init or field_obj.name.startswith("_"):
                continue
            result[field_obj.name] = _serialize_value(getattr(self, field_obj.name))
        return result

    def to_json_str(self, pretty_print: bool = True) -> str:
        """Convert to JSON string format.

        Args:
            pretty_print: Whether to format JSON with indentation

        Returns:
            JSON string representation
        """
        data = self.to_dict()
        return (
            json.dumps(data, indent=2)
            if pretty_print
            else json.dumps(data, separators=(",", ":"))
        )

    def save_to_file(self, file_path: str, encoding: str = "utf-8") -> None:
        """Save to JSON file format.

        Args:
            file_path: Path to write the JSON file
            encoding: File encoding (default: utf-8)
        """
        with open(file_path, "w", encoding=encoding) as f:
            f.write(self.to_json_str(pretty_print=True))
            f.write("\n")


def _serialize_value(value: Any) -> Any:
    """Serialize a single value for dictionary output."""
    if isinstance(value, JsonDocument):
        return value.to_dict()
    if isinstance(value, (list, tuple)):
        return [_serialize_value(item) for item in value]
    if isinstance(value, dict):
        return {k: _serialize_value(v) for k, v in value.items()}
    return value


def _is_json_document_type(type_hint: Any) -> bool:
    """Check if a type hint represents a JsonDocument subclass."""
    try:
        return isinstance(type_hint, type) and issubclass(type_hint, JsonDocument)
    except (TypeError, AttributeError):
        return False

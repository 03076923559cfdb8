"""Batch documentation generator: static analysis in, English summaries out.

The pipeline has three stages: extract a structural model from source,
serialize it to a fixed XML document, and render one plain-English paragraph
per class and per method from that model.
"""

from .diagnostics import Diagnostic, Severity
from .emitter import SummaryDocument, SummarySet, aggregate, emit, summarize_project
from .extractor import build_model, extract_dependencies, parse_project
from .model import (
    AccessLevel,
    AttributeAccess,
    AttributeDecl,
    ClassDecl,
    CodeModel,
    LocalVariableDecl,
    MethodDecl,
    MethodInvocation,
    PackageDecl,
    ParameterDecl,
    lookup_class,
    validate_model,
)
from .summarizer import (
    MessageKind,
    RapidSummaryMessage,
    RenderingConfig,
    class_messages,
    method_messages,
    render_identifier,
    render_name_list,
    render_type,
)
from .xml_io import export_xml, import_xml

__version__ = "0.1.0"

__all__ = [
    "AccessLevel",
    "AttributeAccess",
    "AttributeDecl",
    "ClassDecl",
    "CodeModel",
    "Diagnostic",
    "LocalVariableDecl",
    "MessageKind",
    "MethodDecl",
    "MethodInvocation",
    "PackageDecl",
    "ParameterDecl",
    "RapidSummaryMessage",
    "RenderingConfig",
    "Severity",
    "SummaryDocument",
    "SummarySet",
    "aggregate",
    "build_model",
    "class_messages",
    "emit",
    "export_xml",
    "extract_dependencies",
    "import_xml",
    "lookup_class",
    "method_messages",
    "parse_project",
    "render_identifier",
    "render_name_list",
    "render_type",
    "summarize_project",
    "validate_model",
]

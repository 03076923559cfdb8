"""Builds the project model from parse trees.

Dependency extraction walks each method body and records, in source order:

* attribute accesses: every simple name used as the receiver of a call or
  field selection (unless it is ``this`` or names a known type), and every
  selected field name outside call position; deduplicated by name, first
  occurrence wins;
* method invocations: every called method name, duplicates preserved.

Receivers resolve against locals, then parameters, then fields; unresolvable
names degrade to the ``unknown``/``external`` sentinels rather than failing.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

from . import syntax as syn
from .diagnostics import Diagnostic, Severity, error, warning
from .lexer import tokenize
from .model import (
    EXTERNAL_RECEIVER,
    UNKNOWN_TYPE,
    AttributeAccess,
    AttributeDecl,
    ClassDecl,
    CodeModel,
    LocalVariableDecl,
    MethodDecl,
    MethodInvocation,
    PackageDecl,
    ParameterDecl,
    validate_model,
)
from .parser import parse_compilation_unit

# Package used for classes whose file has no package declaration; the name is
# a reserved word in the grammar, so it cannot collide with a declared one.
DEFAULT_PACKAGE = "default"


@dataclass
class ResolutionContext:
    """Name-resolution scope for one method body."""

    enclosing_class: str
    superclass: str | None
    fields: dict[str, str]
    parameters: dict[str, str]
    known_types: set[str]
    locals: dict[str, str] = field(default_factory=dict)

    def resolve_variable(self, name: str) -> str | None:
        """Declared type of ``name``; locals shadow parameters shadow fields."""
        for scope in (self.locals, self.parameters, self.fields):
            if name in scope:
                return scope[name]
        return None


@dataclass
class _Analysis:
    locals: list[LocalVariableDecl] = field(default_factory=list)
    # (line, column, payload) events; sorted by position afterwards so that
    # tree walk order never leaks into the output.
    accesses: list[tuple[int, int, AttributeAccess]] = field(default_factory=list)
    invocations: list[tuple[int, int, MethodInvocation]] = field(default_factory=list)


def analyze_method_body(
    body: syn.BlockStmt | None, ctx: ResolutionContext
) -> tuple[list[LocalVariableDecl], list[AttributeAccess], list[MethodInvocation]]:
    """Collect locals, attribute accesses, and invocations from one body."""
    analysis = _Analysis()
    if body is not None:
        _walk_statement(body, ctx, analysis)

    accesses: list[AttributeAccess] = []
    seen: set[str] = set()
    for _, _, access in sorted(analysis.accesses, key=lambda item: (item[0], item[1])):
        if access.name not in seen:
            seen.add(access.name)
            accesses.append(access)
    invocations = [
        invocation
        for _, _, invocation in sorted(analysis.invocations, key=lambda item: (item[0], item[1]))
    ]
    return analysis.locals, accesses, invocations


def extract_dependencies(
    body: syn.BlockStmt | None, ctx: ResolutionContext
) -> tuple[list[AttributeAccess], list[MethodInvocation]]:
    """Accesses and invocations of one method body, in source order."""
    _, accesses, invocations = analyze_method_body(body, ctx)
    return accesses, invocations


def _walk_statement(stmt: syn.Stmt, ctx: ResolutionContext, out: _Analysis) -> None:
    if isinstance(stmt, syn.BlockStmt):
        for inner in stmt.statements:
            _walk_statement(inner, ctx, out)
    elif isinstance(stmt, syn.LocalDeclStmt):
        for declarator in stmt.declarators:
            if declarator.initializer is not None:
                _walk_expression(declarator.initializer, ctx, out)
            declared_type = stmt.type_text + declarator.extra_dims
            # The variable is in scope only after its own initializer.
            ctx.locals[declarator.name.text] = declared_type
            out.locals.append(LocalVariableDecl(declarator.name.text, declared_type))
    elif isinstance(stmt, syn.ExprStmt):
        _walk_expression(stmt.expression, ctx, out)
    elif isinstance(stmt, syn.ReturnStmt):
        if stmt.value is not None:
            _walk_expression(stmt.value, ctx, out)
    elif isinstance(stmt, syn.ThrowStmt):
        _walk_expression(stmt.value, ctx, out)
    elif isinstance(stmt, syn.IfStmt):
        _walk_expression(stmt.condition, ctx, out)
        _walk_statement(stmt.then_branch, ctx, out)
        if stmt.else_branch is not None:
            _walk_statement(stmt.else_branch, ctx, out)
    elif isinstance(stmt, syn.WhileStmt):
        _walk_expression(stmt.condition, ctx, out)
        _walk_statement(stmt.body, ctx, out)
    elif isinstance(stmt, syn.DoWhileStmt):
        _walk_statement(stmt.body, ctx, out)
        _walk_expression(stmt.condition, ctx, out)
    elif isinstance(stmt, syn.ForStmt):
        if isinstance(stmt.init, syn.LocalDeclStmt):
            _walk_statement(stmt.init, ctx, out)
        elif isinstance(stmt.init, list):
            for expression in stmt.init:
                _walk_expression(expression, ctx, out)
        if stmt.condition is not None:
            _walk_expression(stmt.condition, ctx, out)
        for expression in stmt.update:
            _walk_expression(expression, ctx, out)
        _walk_statement(stmt.body, ctx, out)
    elif isinstance(stmt, syn.ForEachStmt):
        _walk_expression(stmt.iterable, ctx, out)
        ctx.locals[stmt.name.text] = stmt.type_text
        out.locals.append(LocalVariableDecl(stmt.name.text, stmt.type_text))
        _walk_statement(stmt.body, ctx, out)
    # Break/Continue/Empty carry nothing.


def _record_receiver_name(token: syn.Token, ctx: ResolutionContext, out: _Analysis) -> None:
    resolved = ctx.resolve_variable(token.text)
    if resolved is None and token.text in ctx.known_types:
        return
    out.accesses.append(
        (token.line, token.column, AttributeAccess(token.text, resolved if resolved is not None else UNKNOWN_TYPE))
    )


def _receiver_type(receiver: syn.Expr | None, ctx: ResolutionContext) -> str:
    if receiver is None or isinstance(receiver, syn.ThisExpr):
        return ctx.enclosing_class
    if isinstance(receiver, syn.SuperExpr):
        return ctx.superclass if ctx.superclass else EXTERNAL_RECEIVER
    if isinstance(receiver, syn.ParenExpr):
        return _receiver_type(receiver.inner, ctx)
    if isinstance(receiver, syn.NewExpr):
        return receiver.type_text
    if isinstance(receiver, syn.NameExpr):
        resolved = ctx.resolve_variable(receiver.token.text)
        if resolved is not None:
            return resolved
        if receiver.token.text in ctx.known_types:
            return receiver.token.text
    return EXTERNAL_RECEIVER


def _walk_expression(expr: syn.Expr, ctx: ResolutionContext, out: _Analysis) -> None:
    if isinstance(expr, (syn.LiteralExpr, syn.ThisExpr, syn.SuperExpr, syn.NameExpr)):
        # A bare name that is neither a receiver nor a selected field is not
        # an attribute access.
        return
    if isinstance(expr, syn.FieldSelectExpr):
        receiver = expr.receiver
        if isinstance(receiver, syn.NameExpr):
            _record_receiver_name(receiver.token, ctx, out)
        else:
            _walk_expression(receiver, ctx, out)
        if isinstance(receiver, syn.ThisExpr):
            resolved = ctx.fields.get(expr.name.text, UNKNOWN_TYPE)
        else:
            resolved = UNKNOWN_TYPE
        out.accesses.append((expr.name.line, expr.name.column, AttributeAccess(expr.name.text, resolved)))
        return
    if isinstance(expr, syn.CallExpr):
        out.invocations.append(
            (expr.name.line, expr.name.column, MethodInvocation(expr.name.text, _receiver_type(expr.receiver, ctx)))
        )
        if isinstance(expr.receiver, syn.NameExpr):
            _record_receiver_name(expr.receiver.token, ctx, out)
        elif expr.receiver is not None:
            _walk_expression(expr.receiver, ctx, out)
        for argument in expr.arguments:
            _walk_expression(argument, ctx, out)
        return
    if isinstance(expr, syn.ConstructorDelegationExpr):
        for argument in expr.arguments:
            _walk_expression(argument, ctx, out)
        return
    if isinstance(expr, syn.NewExpr):
        for argument in expr.arguments:
            _walk_expression(argument, ctx, out)
        return
    if isinstance(expr, syn.ArrayCreationExpr):
        for dimension in expr.dimensions:
            _walk_expression(dimension, ctx, out)
        if expr.initializer is not None:
            _walk_expression(expr.initializer, ctx, out)
        return
    if isinstance(expr, syn.ArrayInitExpr):
        for value in expr.values:
            _walk_expression(value, ctx, out)
        return
    if isinstance(expr, syn.IndexExpr):
        _walk_expression(expr.array, ctx, out)
        _walk_expression(expr.index, ctx, out)
        return
    if isinstance(expr, syn.UnaryExpr):
        _walk_expression(expr.operand, ctx, out)
        return
    if isinstance(expr, syn.BinaryExpr):
        _walk_expression(expr.left, ctx, out)
        _walk_expression(expr.right, ctx, out)
        return
    if isinstance(expr, syn.AssignExpr):
        _walk_expression(expr.target, ctx, out)
        _walk_expression(expr.value, ctx, out)
        return
    if isinstance(expr, syn.ConditionalExpr):
        _walk_expression(expr.condition, ctx, out)
        _walk_expression(expr.if_true, ctx, out)
        _walk_expression(expr.if_false, ctx, out)
        return
    if isinstance(expr, syn.CastExpr):
        _walk_expression(expr.operand, ctx, out)
        return
    if isinstance(expr, syn.ParenExpr):
        _walk_expression(expr.inner, ctx, out)
        return
    if isinstance(expr, syn.InstanceofExpr):
        _walk_expression(expr.operand, ctx, out)
        return
    if isinstance(expr, syn.ClassLiteralExpr):
        if isinstance(expr.operand, syn.NameExpr):
            _record_receiver_name(expr.operand.token, ctx, out)
        elif expr.operand is not None:
            _walk_expression(expr.operand, ctx, out)
        return


def _import_simple_names(imports: list[str]) -> set[str]:
    names: set[str] = set()
    for imported in imports:
        tail = imported.rsplit(".", 1)[-1]
        if tail != "*":
            names.add(tail)
    return names


def build_model(
    units: list[syn.CompilationUnit], project_name: str
) -> tuple[CodeModel, list[Diagnostic]]:
    """Assemble one model from parsed units, grouping classes by package.

    Later duplicates (class within package, field within class) are dropped
    with an error diagnostic so the result always satisfies validate_model.
    """
    diagnostics: list[Diagnostic] = []
    model_class_names = {cls.name.text for unit in units for cls in unit.classes}

    package_order: list[str] = []
    package_classes: dict[str, list[ClassDecl]] = {}
    seen_classes: set[tuple[str, str]] = set()

    for unit in units:
        package_name = unit.package if unit.package is not None else DEFAULT_PACKAGE
        known_types = model_class_names | _import_simple_names(unit.imports)
        for cls in unit.classes:
            key = (package_name, cls.name.text)
            if key in seen_classes:
                diagnostics.append(
                    error(
                        f"duplicate class {cls.name.text!r} in package {package_name!r} (dropped)",
                        unit.file,
                        cls.name.line,
                        cls.name.column,
                    )
                )
                continue
            seen_classes.add(key)
            declared = _build_class(cls, package_name, known_types, unit.file, diagnostics)
            if package_name not in package_classes:
                package_order.append(package_name)
                package_classes[package_name] = []
            package_classes[package_name].append(declared)

    model = CodeModel(
        project_name=project_name,
        packages=tuple(PackageDecl(name, tuple(package_classes[name])) for name in package_order),
    )
    diagnostics.extend(validate_model(model))
    return model, diagnostics


def _build_class(
    cls: syn.ClassSyntax,
    package_name: str,
    known_types: set[str],
    file: str,
    diagnostics: list[Diagnostic],
) -> ClassDecl:
    attributes: list[AttributeDecl] = []
    field_types: dict[str, str] = {}
    for field_syntax in cls.fields:
        if field_syntax.name.text in field_types:
            diagnostics.append(
                error(
                    f"duplicate field {field_syntax.name.text!r} in class {cls.name.text!r} (dropped)",
                    file,
                    field_syntax.name.line,
                    field_syntax.name.column,
                )
            )
            continue
        field_types[field_syntax.name.text] = field_syntax.type_text
        attributes.append(
            AttributeDecl(field_syntax.name.text, field_syntax.access_level, field_syntax.type_text)
        )

    methods: list[MethodDecl] = []
    for method_syntax in cls.methods:
        ctx = ResolutionContext(
            enclosing_class=cls.name.text,
            superclass=cls.superclass,
            fields=dict(field_types),
            parameters={param.name.text: param.type_text for param in method_syntax.parameters},
            known_types=known_types,
        )
        locals_, accesses, invocations = analyze_method_body(method_syntax.body, ctx)
        methods.append(
            MethodDecl(
                name=method_syntax.name.text,
                access_level=method_syntax.access_level,
                return_type=method_syntax.return_type,
                declared_class=cls.name.text,
                parameters=tuple(
                    ParameterDecl(param.name.text, param.type_text) for param in method_syntax.parameters
                ),
                local_variables=tuple(locals_),
                attribute_accesses=tuple(accesses),
                method_invocations=tuple(invocations),
            )
        )

    return ClassDecl(
        name=cls.name.text,
        access_level=cls.access_level,
        declared_package=package_name,
        superclass=cls.superclass,
        attributes=tuple(attributes),
        methods=tuple(methods),
    )


def discover_source_files(root: Path, extension: str = ".java") -> list[Path]:
    """All files under ``root`` with the given extension, sorted by path."""
    return sorted(
        (path for path in root.rglob(f"*{extension}") if path.is_file()),
        key=lambda path: path.as_posix(),
    )


def parse_project(
    root: Path,
    extension: str = ".java",
    strict: bool = True,
    project_name: str | None = None,
) -> tuple[CodeModel, list[Diagnostic], int]:
    """Read, tokenize, parse, and assemble every source file under ``root``.

    Returns the model, all diagnostics, and the total source size in
    characters (used for the summary-to-source length report).
    """
    name = project_name if project_name is not None else root.name
    diagnostics: list[Diagnostic] = []
    units: list[syn.CompilationUnit] = []
    source_length = 0

    files = discover_source_files(root, extension)
    if not files:
        diagnostics.append(warning(f"no {extension} files found under {root.as_posix()}"))

    for path in files:
        display = path.as_posix()
        try:
            text = path.read_text(encoding="utf-8")
        except (OSError, UnicodeDecodeError) as exc:
            diagnostics.append(error(f"cannot read source file: {exc}", display))
            continue
        source_length += len(text)
        tokens, lex_diagnostics = tokenize(text, display, strict)
        diagnostics.extend(lex_diagnostics)
        if strict and any(d.severity is Severity.ERROR for d in lex_diagnostics):
            continue
        unit, parse_diagnostics = parse_compilation_unit(tokens, display, strict)
        diagnostics.extend(parse_diagnostics)
        if unit is not None:
            units.append(unit)

    model, build_diagnostics = build_model(units, name)
    diagnostics.extend(build_diagnostics)
    return model, diagnostics, source_length

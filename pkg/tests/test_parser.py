"""Parse-tree shape, recovery behavior, and subset boundaries."""

import pytest

from codesum import syntax as syn
from codesum.diagnostics import Severity, has_errors
from codesum.lexer import tokenize
from codesum.model import AccessLevel
from codesum.parser import parse_compilation_unit


def _parse(source: str, strict: bool = True):
    tokens, lex_diagnostics = tokenize(source, "Test.java", strict)
    assert not has_errors(lex_diagnostics)
    return parse_compilation_unit(tokens, "Test.java", strict)


def _clean(source: str) -> syn.CompilationUnit:
    unit, diagnostics = _parse(source)
    assert unit is not None
    assert diagnostics == [], [str(d) for d in diagnostics]
    return unit


def test_package_and_imports():
    unit = _clean("package a.b;\nimport java.util.List;\nimport java.util.*;\nclass C {}")
    assert unit.package == "a.b"
    assert unit.imports == ["java.util.List", "java.util.*"]
    assert [cls.name.text for cls in unit.classes] == ["C"]
    assert unit.classes[0].access_level is AccessLevel.PACKAGE_PRIVATE


def test_missing_package_is_allowed():
    unit = _clean("class C {}")
    assert unit.package is None


def test_class_header_with_extends_and_implements():
    unit = _clean("public class A extends java.awt.Frame implements Runnable, Closeable {}")
    cls = unit.classes[0]
    assert cls.access_level is AccessLevel.PUBLIC
    assert cls.superclass == "java.awt.Frame"


def test_constructor_is_detected_by_name_and_call_shape():
    unit = _clean("class A { public A(int x) {} A A() { return null; } }")
    constructor, plain = unit.classes[0].methods
    assert constructor.is_constructor
    assert constructor.return_type == "A"
    assert [p.name.text for p in constructor.parameters] == ["x"]
    assert not plain.is_constructor
    assert plain.name.text == "A"
    assert plain.return_type == "A"


def test_field_declarations_with_multiple_declarators_and_dims():
    unit = _clean("class A { private int x, y = 2, z[]; }")
    fields = unit.classes[0].fields
    assert [(f.name.text, f.type_text) for f in fields] == [("x", "int"), ("y", "int"), ("z", "int[]")]
    assert all(f.access_level is AccessLevel.PRIVATE for f in fields)
    assert fields[1].initializer is not None


def test_parameter_dims_before_and_after_name():
    unit = _clean("class A { void m(final int[] a, String b[]) {} }")
    params = unit.classes[0].methods[0].parameters
    assert [(p.name.text, p.type_text) for p in params] == [("a", "int[]"), ("b", "String[]")]


def test_generic_type_text_is_canonicalized():
    unit = _clean("class A { Map<String,Integer> m; List<List<int[]>> n; }")
    fields = unit.classes[0].fields
    assert fields[0].type_text == "Map<String, Integer>"
    assert fields[1].type_text == "List<List<int[]>>"


def test_throws_clause_and_bodiless_method():
    unit = _clean("abstract class A { abstract void m() throws java.io.IOException, Error; }")
    method = unit.classes[0].methods[0]
    assert method.body is None
    assert method.body_tokens == []


def test_body_tokens_cover_the_braced_body():
    unit = _clean("class A { void m() { int x = 1; } }")
    method = unit.classes[0].methods[0]
    assert [t.text for t in method.body_tokens] == ["int", "x", "=", "1", ";"]


def test_statement_shapes():
    unit = _clean(
        """
        class A {
            void m(int n) {
                ;
                int i = 0, j[] = null;
                if (n > 0) { i++; } else i--;
                while (i < n) { i += 1; }
                do { i -= 1; } while (i > 0);
                for (int k = 0; k < n; k++) { j = null; }
                for (String s : parts()) { use(s); }
                break;
            }
        }
        """
    )
    body = unit.classes[0].methods[0].body
    kinds = [type(stmt).__name__ for stmt in body.statements]
    assert kinds == [
        "EmptyStmt",
        "LocalDeclStmt",
        "IfStmt",
        "WhileStmt",
        "DoWhileStmt",
        "ForStmt",
        "ForEachStmt",
        "BreakStmt",
    ]
    declaration = body.statements[1]
    assert [(d.name.text, d.extra_dims) for d in declaration.declarators] == [("i", ""), ("j", "[]")]


def test_expression_shapes():
    unit = _clean(
        """
        class A {
            void m(Object o) {
                int x = a ? b : (int) c;
                boolean t = o instanceof String;
                int[] arr = new int[5];
                int[] lit = {1, 2};
                Object k = String.class;
                arr[0] = -x;
            }
        }
        """
    )
    statements = unit.classes[0].methods[0].body.statements
    first = statements[0].declarators[0].initializer
    assert isinstance(first, syn.ConditionalExpr)
    assert isinstance(first.if_false, syn.CastExpr)
    assert isinstance(statements[1].declarators[0].initializer, syn.InstanceofExpr)
    assert isinstance(statements[2].declarators[0].initializer, syn.ArrayCreationExpr)
    assert isinstance(statements[3].declarators[0].initializer, syn.ArrayInitExpr)
    assert isinstance(statements[4].declarators[0].initializer, syn.ClassLiteralExpr)
    assert isinstance(statements[5].expression, syn.AssignExpr)


def test_call_shapes():
    unit = _clean(
        """
        class A extends B {
            A() { super(1); }
            void m() { run(); this.run(); helper.run(); new A().run(); super.run(); }
        }
        """
    )
    constructor, method = unit.classes[0].methods
    delegation = constructor.body.statements[0].expression
    assert isinstance(delegation, syn.ConstructorDelegationExpr)
    calls = [stmt.expression for stmt in method.body.statements]
    assert all(isinstance(call, syn.CallExpr) for call in calls)
    assert calls[0].receiver is None
    assert isinstance(calls[1].receiver, syn.ThisExpr)
    assert isinstance(calls[2].receiver, syn.NameExpr)
    assert isinstance(calls[3].receiver, syn.NewExpr)
    assert isinstance(calls[4].receiver, syn.SuperExpr)


@pytest.mark.parametrize(
    "source, phrase",
    [
        ("@Deprecated public class A {}", "annotation"),
        ("class A { @Override void m() {} }", "annotation"),
        ("interface I { void run(); } class A {}", "interface"),
        ("enum E { ONE, TWO } class A {}", "enum"),
        ("class A { class Inner {} void m() {} }", "nested class"),
        ("class A { static { } void m() {} }", "initializer block"),
        ("class A<T> { void m() {} }", "generic type parameters"),
        ("class A { void m() { Runnable r = new Runnable() { }; } }", "anonymous class"),
    ],
)
def test_unsupported_constructs_warn_and_are_skipped(source, phrase):
    unit, diagnostics = _parse(source)
    assert unit is not None
    assert not has_errors(diagnostics)
    assert any(phrase in d.message and "unsupported construct" in d.message for d in diagnostics)
    cls = next(c for c in unit.classes if c.name.text == "A")
    # The surviving class still carries its supported members.
    if "void m()" in source:
        assert [m.name.text for m in cls.methods] == ["m"]


def test_strict_mode_stops_at_first_problem():
    unit, diagnostics = _parse("class A { void m() { &&; } } class B {}", strict=True)
    assert unit is None
    assert [d.severity for d in diagnostics] == [Severity.ERROR]
    assert diagnostics[0].file == "Test.java"
    assert diagnostics[0].line > 0


def test_lenient_mode_recovers_at_next_top_level_declaration():
    unit, diagnostics = _parse("class A { void m() { &&; } } class B {}", strict=False)
    assert unit is not None
    assert [cls.name.text for cls in unit.classes] == ["B"]
    assert any(
        d.severity is Severity.WARNING and "skipping to next top-level declaration" in d.message
        for d in diagnostics
    )


def test_lenient_mode_terminates_on_pathological_input():
    unit, diagnostics = _parse("]]]] class ; ) (", strict=False)
    assert unit is not None
    assert diagnostics, "expected at least one warning"


def test_parsing_is_deterministic():
    source = "package p; class A { int x; void m(int a) { x = a; } }"
    first, first_diagnostics = _parse(source)
    second, second_diagnostics = _parse(source)
    assert first == second
    assert first_diagnostics == second_diagnostics

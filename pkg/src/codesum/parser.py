"""Recursive-descent parser for the supported source grammar.

Recognized shapes: one package declaration, imports, top-level classes with a
single extends clause, fields, methods, and constructors with statement
bodies. Interfaces, enums, annotations, nested classes, lambdas, and
initializer blocks are outside the subset and are skipped with a warning.

Strict mode stops at the first syntax problem in a file; lenient mode records
it as a warning and resumes at the next top-level declaration.
"""

from __future__ import annotations

from .diagnostics import Diagnostic, error, warning
from .lexer import PRIMITIVE_TYPES, Token, TokenKind
from .model import AccessLevel
from . import syntax as syn

_ACCESS_KEYWORDS = {
    "public": AccessLevel.PUBLIC,
    "private": AccessLevel.PRIVATE,
    "protected": AccessLevel.PROTECTED,
}

_OTHER_MODIFIERS = frozenset(
    ["static", "final", "abstract", "native", "synchronized", "transient", "volatile", "strictfp"]
)

# Tokens that can open a top-level declaration; used for lenient-mode recovery.
_TOP_LEVEL_START = frozenset(
    ["class", "interface", "enum", "public", "private", "protected", "abstract", "strictfp", "import", "package"]
)

_LITERAL_KEYWORDS = frozenset(["true", "false", "null"])

_ASSIGN_OPERATORS = frozenset(
    ["=", "+=", "-=", "*=", "/=", "%=", "&=", "|=", "^=", "<<=", ">>=", ">>>="]
)


class _ParseFailure(Exception):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(message)
        self.message = message
        self.line = line
        self.column = column


def _append_type_text(buffer: str, token: Token) -> str:
    if token.text == ",":
        return buffer + ", "
    word = token.kind in (TokenKind.IDENTIFIER, TokenKind.KEYWORD, TokenKind.LITERAL)
    if word and buffer and buffer[-1] not in "<.( ":
        return buffer + " " + token.text
    return buffer + token.text


class _Parser:
    def __init__(self, tokens: list[Token], file: str, strict: bool):
        self.tokens = tokens
        self.file = file
        self.strict = strict
        self.pos = 0
        self.diagnostics: list[Diagnostic] = []

    # ------------------------------------------------------------------
    # token plumbing

    def _token_at(self, index: int) -> Token | None:
        if 0 <= index < len(self.tokens):
            return self.tokens[index]
        return None

    def _peek(self, offset: int = 0) -> Token | None:
        return self._token_at(self.pos + offset)

    def _at_end(self) -> bool:
        return self.pos >= len(self.tokens)

    def _advance(self) -> Token:
        token = self.tokens[self.pos]
        self.pos += 1
        return token

    def _check(self, text: str) -> bool:
        token = self._peek()
        return token is not None and token.text == text

    def _check_kind(self, kind: TokenKind) -> bool:
        token = self._peek()
        return token is not None and token.kind is kind

    def _match(self, text: str) -> bool:
        if self._check(text):
            self.pos += 1
            return True
        return False

    def _failure_position(self) -> tuple[int, int]:
        token = self._peek()
        if token is None:
            token = self.tokens[-1] if self.tokens else None
        if token is None:
            return 1, 1
        return token.line, token.column

    def _fail(self, message: str) -> _ParseFailure:
        line, column = self._failure_position()
        found = self._peek()
        detail = f"{message}, found {found.text!r}" if found is not None else f"{message}, found end of file"
        return _ParseFailure(detail, line, column)

    def _expect_text(self, text: str, context: str) -> Token:
        if not self._check(text):
            raise self._fail(f"expected {text!r} {context}")
        return self._advance()

    def _expect_identifier(self, context: str) -> Token:
        if not self._check_kind(TokenKind.IDENTIFIER):
            raise self._fail(f"expected identifier {context}")
        return self._advance()

    def _warn_at(self, message: str, token: Token) -> None:
        self.diagnostics.append(warning(message, self.file, token.line, token.column))

    # ------------------------------------------------------------------
    # compilation unit

    def parse_unit(self) -> tuple[syn.CompilationUnit | None, list[Diagnostic]]:
        unit = syn.CompilationUnit(self.file)
        try:
            self._skip_annotations()
            if self._check("package"):
                self._advance()
                unit.package = self._parse_qualified_name("after 'package'")
                self._expect_text(";", "after package name")
            while True:
                self._skip_annotations()
                if not self._check("import"):
                    break
                self._advance()
                self._match("static")
                name = self._parse_qualified_name("after 'import'")
                if self._match("."):
                    self._expect_text("*", "in import")
                    name += ".*"
                self._expect_text(";", "after import")
                unit.imports.append(name)
        except _ParseFailure as failure:
            if not self._handle_failure(failure):
                return None, self.diagnostics
            self._synchronize_top_level()

        while not self._at_end():
            start_pos = self.pos
            try:
                self._skip_annotations()
                if self._at_end():
                    break
                if self._match(";"):
                    continue
                access = self._parse_modifiers()
                token = self._peek()
                if token is None:
                    break
                if token.text == "class":
                    self._advance()
                    unit.classes.append(self._parse_class(access))
                elif token.text in ("interface", "enum"):
                    self._warn_at(f"unsupported construct: {token.text} declaration (skipped)", token)
                    self._advance()
                    self._skip_declaration_with_body()
                else:
                    raise self._fail("expected class declaration")
            except _ParseFailure as failure:
                if not self._handle_failure(failure):
                    return None, self.diagnostics
                if self.pos == start_pos:
                    self.pos += 1
                self._synchronize_top_level()

        return unit, self.diagnostics

    def _handle_failure(self, failure: _ParseFailure) -> bool:
        """Record a syntax problem; True means parsing may continue."""
        if self.strict:
            self.diagnostics.append(error(failure.message, self.file, failure.line, failure.column))
            return False
        self.diagnostics.append(
            warning(f"{failure.message} (skipping to next top-level declaration)", self.file, failure.line, failure.column)
        )
        return True

    def _synchronize_top_level(self) -> None:
        depth = 0
        while not self._at_end():
            token = self.tokens[self.pos]
            if token.text == "{":
                depth += 1
            elif token.text == "}":
                if depth > 0:
                    depth -= 1
                self.pos += 1
                continue
            elif depth == 0 and (token.text in _TOP_LEVEL_START or token.text == "@"):
                return
            self.pos += 1

    # ------------------------------------------------------------------
    # shared pieces

    def _skip_annotations(self) -> None:
        while self._check("@"):
            at_token = self._advance()
            self._warn_at("unsupported construct: annotation (skipped)", at_token)
            self._expect_identifier("after '@'")
            while self._match("."):
                self._expect_identifier("in annotation name")
            if self._check("("):
                self._skip_balanced("(", ")")

    def _parse_modifiers(self) -> AccessLevel:
        access: AccessLevel | None = None
        while True:
            token = self._peek()
            if token is None or token.kind is not TokenKind.KEYWORD:
                break
            if token.text in _ACCESS_KEYWORDS:
                if access is None:
                    access = _ACCESS_KEYWORDS[token.text]
                self._advance()
            elif token.text in _OTHER_MODIFIERS:
                self._advance()
            else:
                break
        return access if access is not None else AccessLevel.PACKAGE_PRIVATE

    def _parse_qualified_name(self, context: str) -> str:
        parts = [self._expect_identifier(context).text]
        while True:
            dot = self._peek()
            after = self._peek(1)
            if dot is not None and dot.text == "." and after is not None and after.kind is TokenKind.IDENTIFIER:
                self._advance()
                parts.append(self._advance().text)
            else:
                break
        return ".".join(parts)

    def _parse_type(self, context: str) -> str:
        token = self._peek()
        if token is None:
            raise self._fail(f"expected type {context}")
        if token.kind is TokenKind.KEYWORD and (token.text in PRIMITIVE_TYPES or token.text == "void"):
            text = self._advance().text
        elif token.kind is TokenKind.IDENTIFIER:
            text = self._parse_qualified_name(context)
        else:
            raise self._fail(f"expected type {context}")
        if self._check("<"):
            text = self._consume_generic_arguments(text)
        while True:
            bracket = self._peek()
            closing = self._peek(1)
            if bracket is not None and bracket.text == "[" and closing is not None and closing.text == "]":
                self.pos += 2
                text += "[]"
            else:
                break
        return text

    def _consume_generic_arguments(self, text: str) -> str:
        depth = 0
        while True:
            token = self._peek()
            if token is None:
                raise self._fail("expected '>' closing generic arguments")
            if token.text == "<":
                depth += 1
            elif token.text in (">", ">>", ">>>"):
                depth -= len(token.text)
                if depth < 0:
                    raise self._fail("unbalanced '>' in generic arguments")
            text = _append_type_text(text, token)
            self._advance()
            if depth == 0:
                return text

    def _skip_balanced(self, opener: str, closer: str) -> None:
        open_token = self._expect_text(opener, "")
        depth = 1
        while depth > 0:
            if self._at_end():
                raise _ParseFailure(
                    f"unexpected end of file, unclosed {opener!r}", open_token.line, open_token.column
                )
            text = self._advance().text
            if text == opener:
                depth += 1
            elif text == closer:
                depth -= 1

    def _skip_declaration_with_body(self) -> None:
        """Consume the rest of a skipped declaration, including its brace block."""
        while not self._at_end():
            if self._check("{"):
                self._skip_balanced("{", "}")
                return
            if self._match(";"):
                return
            self._advance()
        raise self._fail("unexpected end of file in skipped declaration")

    # ------------------------------------------------------------------
    # class members

    def _parse_class(self, access: AccessLevel) -> syn.ClassSyntax:
        name = self._expect_identifier("after 'class'")
        cls = syn.ClassSyntax(name=name, access_level=access)
        if self._check("<"):
            self._warn_at("unsupported construct: generic type parameters (skipped)", self._peek())  # type: ignore[arg-type]
            self._consume_generic_arguments("")
        if self._match("extends"):
            cls.superclass = self._parse_type("after 'extends'")
        if self._match("implements"):
            self._parse_type("after 'implements'")
            while self._match(","):
                self._parse_type("in implements clause")
        self._expect_text("{", "to open class body")
        while not self._check("}"):
            if self._at_end():
                raise _ParseFailure(f"unexpected end of file in class {name.text!r}", name.line, name.column)
            self._parse_member(cls)
        self._expect_text("}", "to close class body")
        return cls

    def _parse_member(self, cls: syn.ClassSyntax) -> None:
        self._skip_annotations()
        if self._match(";"):
            return
        access = self._parse_modifiers()
        token = self._peek()
        if token is None:
            raise self._fail("unexpected end of file in class body")
        if token.text == "{":
            self._warn_at("unsupported construct: initializer block (skipped)", token)
            self._skip_balanced("{", "}")
            return
        if token.text in ("class", "interface", "enum"):
            self._warn_at(f"unsupported construct: nested {token.text} (skipped)", token)
            self._advance()
            self._skip_declaration_with_body()
            return
        next_token = self._peek(1)
        if (
            token.kind is TokenKind.IDENTIFIER
            and token.text == cls.name.text
            and next_token is not None
            and next_token.text == "("
        ):
            name = self._advance()
            cls.methods.append(self._parse_method(name, access, cls.name.text, is_constructor=True))
            return
        type_text = self._parse_type("for member declaration")
        name = self._expect_identifier("for member name")
        if self._check("("):
            cls.methods.append(self._parse_method(name, access, type_text, is_constructor=False))
        else:
            self._parse_field_declarators(cls, name, access, type_text)

    def _parse_field_declarators(
        self, cls: syn.ClassSyntax, first_name: Token, access: AccessLevel, type_text: str
    ) -> None:
        name = first_name
        while True:
            dims = ""
            while self._check("[") and self._peek(1) is not None and self._peek(1).text == "]":  # type: ignore[union-attr]
                self.pos += 2
                dims += "[]"
            initializer = None
            if self._match("="):
                initializer = self._parse_variable_initializer()
            cls.fields.append(
                syn.FieldSyntax(name=name, access_level=access, type_text=type_text + dims, initializer=initializer)
            )
            if self._match(","):
                name = self._expect_identifier("after ',' in field declaration")
                continue
            self._expect_text(";", "after field declaration")
            return

    def _parse_method(
        self, name: Token, access: AccessLevel, return_type: str, is_constructor: bool
    ) -> syn.MethodSyntax:
        method = syn.MethodSyntax(
            name=name, access_level=access, return_type=return_type, is_constructor=is_constructor
        )
        self._expect_text("(", "to open parameter list")
        if not self._check(")"):
            while True:
                self._match("final")
                param_type = self._parse_type("for parameter")
                param_name = self._expect_identifier("for parameter name")
                dims = ""
                while self._check("[") and self._peek(1) is not None and self._peek(1).text == "]":  # type: ignore[union-attr]
                    self.pos += 2
                    dims += "[]"
                method.parameters.append(syn.ParamSyntax(name=param_name, type_text=param_type + dims))
                if not self._match(","):
                    break
        self._expect_text(")", "to close parameter list")
        if self._match("throws"):
            self._parse_qualified_name("after 'throws'")
            while self._match(","):
                self._parse_qualified_name("in throws clause")
        if self._match(";"):
            return method
        body_open = self.pos
        method.body = self._parse_block()
        method.body_tokens = self.tokens[body_open + 1 : self.pos - 1]
        return method

    # ------------------------------------------------------------------
    # statements

    def _parse_block(self) -> syn.BlockStmt:
        self._expect_text("{", "to open block")
        block = syn.BlockStmt()
        while not self._check("}"):
            if self._at_end():
                raise self._fail("unexpected end of file in block")
            block.statements.append(self._parse_statement())
        self._expect_text("}", "to close block")
        return block

    def _parse_statement(self) -> syn.Stmt:
        token = self._peek()
        if token is None:
            raise self._fail("expected statement")
        if token.text == "{":
            return self._parse_block()
        if token.text == ";":
            self._advance()
            return syn.EmptyStmt()
        if token.kind is TokenKind.KEYWORD:
            handler = {
                "return": self._parse_return,
                "throw": self._parse_throw,
                "if": self._parse_if,
                "while": self._parse_while,
                "do": self._parse_do_while,
                "for": self._parse_for,
            }.get(token.text)
            if handler is not None:
                return handler()
            if token.text == "break":
                self._advance()
                self._expect_text(";", "after 'break'")
                return syn.BreakStmt()
            if token.text == "continue":
                self._advance()
                self._expect_text(";", "after 'continue'")
                return syn.ContinueStmt()
            if token.text == "final":
                if self._looks_like_local_declaration(self.pos + 1):
                    self._advance()
                    return self._parse_local_declaration()
                raise self._fail("expected declaration after 'final'")
            if token.text in PRIMITIVE_TYPES:
                return self._parse_local_declaration()
            if token.text in ("this", "super", "new") or token.text in _LITERAL_KEYWORDS:
                return self._parse_expression_statement()
            raise self._fail(f"unsupported statement {token.text!r}")
        if self._looks_like_local_declaration(self.pos):
            return self._parse_local_declaration()
        return self._parse_expression_statement()

    def _parse_expression_statement(self) -> syn.ExprStmt:
        expression = self._parse_expression()
        self._expect_text(";", "after expression")
        return syn.ExprStmt(expression)

    def _parse_return(self) -> syn.ReturnStmt:
        self._advance()
        if self._match(";"):
            return syn.ReturnStmt(None)
        value = self._parse_expression()
        self._expect_text(";", "after return value")
        return syn.ReturnStmt(value)

    def _parse_throw(self) -> syn.ThrowStmt:
        self._advance()
        value = self._parse_expression()
        self._expect_text(";", "after thrown value")
        return syn.ThrowStmt(value)

    def _parse_if(self) -> syn.IfStmt:
        self._advance()
        self._expect_text("(", "after 'if'")
        condition = self._parse_expression()
        self._expect_text(")", "after if condition")
        then_branch = self._parse_statement()
        else_branch = None
        if self._match("else"):
            else_branch = self._parse_statement()
        return syn.IfStmt(condition, then_branch, else_branch)

    def _parse_while(self) -> syn.WhileStmt:
        self._advance()
        self._expect_text("(", "after 'while'")
        condition = self._parse_expression()
        self._expect_text(")", "after while condition")
        return syn.WhileStmt(condition, self._parse_statement())

    def _parse_do_while(self) -> syn.DoWhileStmt:
        self._advance()
        body = self._parse_statement()
        self._expect_text("while", "after do body")
        self._expect_text("(", "after 'while'")
        condition = self._parse_expression()
        self._expect_text(")", "after do-while condition")
        self._expect_text(";", "after do-while")
        return syn.DoWhileStmt(body, condition)

    def _parse_for(self) -> syn.Stmt:
        self._advance()
        self._expect_text("(", "after 'for'")

        init: syn.LocalDeclStmt | list[syn.Expr] | None = None
        if not self._match(";"):
            is_declaration = self._looks_like_local_declaration(self.pos)
            if self._check("final") and self._looks_like_local_declaration(self.pos + 1):
                self._advance()
                is_declaration = True
            if is_declaration:
                type_text = self._parse_type("in for initializer")
                name = self._expect_identifier("in for initializer")
                if self._match(":"):
                    iterable = self._parse_expression()
                    self._expect_text(")", "after for-each iterable")
                    return syn.ForEachStmt(type_text, name, iterable, self._parse_statement())
                init = self._parse_declarator_list(type_text, name)
                self._expect_text(";", "after for initializer")
            else:
                init = [self._parse_expression()]
                while self._match(","):
                    init.append(self._parse_expression())
                self._expect_text(";", "after for initializer")

        condition = None
        if not self._match(";"):
            condition = self._parse_expression()
            self._expect_text(";", "after for condition")

        update: list[syn.Expr] = []
        if not self._check(")"):
            update.append(self._parse_expression())
            while self._match(","):
                update.append(self._parse_expression())
        self._expect_text(")", "after for clauses")
        return syn.ForStmt(init, condition, update, self._parse_statement())

    def _looks_like_local_declaration(self, index: int) -> bool:
        token = self._token_at(index)
        if token is None:
            return False
        if token.kind is TokenKind.KEYWORD and token.text in PRIMITIVE_TYPES:
            index += 1
        elif token.kind is TokenKind.IDENTIFIER:
            index += 1
            while True:
                dot = self._token_at(index)
                name = self._token_at(index + 1)
                if dot is not None and dot.text == "." and name is not None and name.kind is TokenKind.IDENTIFIER:
                    index += 2
                else:
                    break
            angle = self._token_at(index)
            if angle is not None and angle.text == "<":
                depth = 0
                while True:
                    token = self._token_at(index)
                    if token is None:
                        return False
                    if token.text == "<":
                        depth += 1
                    elif token.text in (">", ">>", ">>>"):
                        depth -= len(token.text)
                        if depth < 0:
                            return False
                    elif token.text in (";", ")", "{", "}"):
                        return False
                    index += 1
                    if depth == 0:
                        break
        else:
            return False
        while True:
            bracket = self._token_at(index)
            closing = self._token_at(index + 1)
            if bracket is not None and bracket.text == "[" and closing is not None and closing.text == "]":
                index += 2
            else:
                break
        final = self._token_at(index)
        return final is not None and final.kind is TokenKind.IDENTIFIER

    def _parse_local_declaration(self) -> syn.LocalDeclStmt:
        type_text = self._parse_type("in declaration")
        name = self._expect_identifier("in declaration")
        declaration = self._parse_declarator_list(type_text, name)
        self._expect_text(";", "after declaration")
        return declaration

    def _parse_declarator_list(self, type_text: str, first_name: Token) -> syn.LocalDeclStmt:
        declaration = syn.LocalDeclStmt(type_text=type_text, declarators=[])
        name = first_name
        while True:
            dims = ""
            while self._check("[") and self._peek(1) is not None and self._peek(1).text == "]":  # type: ignore[union-attr]
                self.pos += 2
                dims += "[]"
            initializer = None
            if self._match("="):
                initializer = self._parse_variable_initializer()
            declaration.declarators.append(syn.Declarator(name=name, initializer=initializer, extra_dims=dims))
            if self._match(","):
                name = self._expect_identifier("after ',' in declaration")
                continue
            return declaration

    def _parse_variable_initializer(self) -> syn.Expr:
        if self._check("{"):
            return self._parse_array_initializer()
        return self._parse_expression()

    def _parse_array_initializer(self) -> syn.ArrayInitExpr:
        self._expect_text("{", "to open array initializer")
        values: list[syn.Expr] = []
        while not self._check("}"):
            if self._at_end():
                raise self._fail("unexpected end of file in array initializer")
            values.append(self._parse_variable_initializer())
            if not self._match(","):
                break
        self._expect_text("}", "to close array initializer")
        return syn.ArrayInitExpr(values)

    # ------------------------------------------------------------------
    # expressions

    def _parse_expression(self) -> syn.Expr:
        return self._parse_assignment()

    def _parse_assignment(self) -> syn.Expr:
        target = self._parse_conditional()
        token = self._peek()
        if token is not None and token.text in _ASSIGN_OPERATORS:
            operator = self._advance().text
            value = self._parse_assignment()
            return syn.AssignExpr(target, operator, value)
        return target

    def _parse_conditional(self) -> syn.Expr:
        condition = self._parse_binary(0)
        if self._match("?"):
            if_true = self._parse_expression()
            self._expect_text(":", "in conditional expression")
            if_false = self._parse_conditional()
            return syn.ConditionalExpr(condition, if_true, if_false)
        return condition

    _BINARY_LEVELS: tuple[tuple[str, ...], ...] = (
        ("||",),
        ("&&",),
        ("|",),
        ("^",),
        ("&",),
        ("==", "!="),
        ("<", ">", "<=", ">=", "instanceof"),
        ("<<", ">>", ">>>"),
        ("+", "-"),
        ("*", "/", "%"),
    )

    def _parse_binary(self, level: int) -> syn.Expr:
        if level >= len(self._BINARY_LEVELS):
            return self._parse_unary()
        operators = self._BINARY_LEVELS[level]
        left = self._parse_binary(level + 1)
        while True:
            token = self._peek()
            if token is None or token.text not in operators:
                return left
            if token.text == "instanceof":
                self._advance()
                left = syn.InstanceofExpr(left, self._parse_type("after 'instanceof'"))
                continue
            operator = self._advance().text
            right = self._parse_binary(level + 1)
            left = syn.BinaryExpr(operator, left, right)

    def _parse_unary(self) -> syn.Expr:
        token = self._peek()
        if token is not None and token.text in ("+", "-", "!", "~", "++", "--"):
            operator = self._advance().text
            return syn.UnaryExpr(operator, self._parse_unary())
        if token is not None and token.text == "(" and self._looks_like_cast():
            self._advance()
            type_text = self._parse_type("in cast")
            self._expect_text(")", "after cast type")
            return syn.CastExpr(type_text, self._parse_unary())
        return self._parse_postfix(self._parse_primary())

    def _looks_like_cast(self) -> bool:
        index = self.pos + 1
        token = self._token_at(index)
        if token is None:
            return False
        definite = False
        if token.kind is TokenKind.KEYWORD and token.text in PRIMITIVE_TYPES:
            definite = True
            index += 1
        elif token.kind is TokenKind.IDENTIFIER:
            index += 1
            while True:
                dot = self._token_at(index)
                name = self._token_at(index + 1)
                if dot is not None and dot.text == "." and name is not None and name.kind is TokenKind.IDENTIFIER:
                    index += 2
                else:
                    break
            angle = self._token_at(index)
            if angle is not None and angle.text == "<":
                depth = 0
                while True:
                    token = self._token_at(index)
                    if token is None:
                        return False
                    if token.text == "<":
                        depth += 1
                    elif token.text in (">", ">>", ">>>"):
                        depth -= len(token.text)
                        if depth < 0:
                            return False
                    elif token.text in (";", "{", "}"):
                        return False
                    index += 1
                    if depth == 0:
                        break
                definite = True
        else:
            return False
        while True:
            bracket = self._token_at(index)
            closing = self._token_at(index + 1)
            if bracket is not None and bracket.text == "[" and closing is not None and closing.text == "]":
                index += 2
                definite = True
            else:
                break
        if self._token_at(index) is None or self._token_at(index).text != ")":  # type: ignore[union-attr]
            return False
        operand = self._token_at(index + 1)
        if operand is None:
            return False
        if definite:
            return True
        if operand.kind in (TokenKind.IDENTIFIER, TokenKind.LITERAL):
            return True
        if operand.kind is TokenKind.KEYWORD and operand.text in ("this", "super", "new", "true", "false", "null"):
            return True
        return operand.text in ("(", "!", "~")

    def _parse_primary(self) -> syn.Expr:
        token = self._peek()
        if token is None:
            raise self._fail("expected expression")
        if token.kind is TokenKind.LITERAL:
            return syn.LiteralExpr(self._advance())
        if token.kind is TokenKind.IDENTIFIER:
            return syn.NameExpr(self._advance())
        if token.kind is TokenKind.KEYWORD:
            if token.text in _LITERAL_KEYWORDS:
                return syn.LiteralExpr(self._advance())
            if token.text == "this":
                return syn.ThisExpr(self._advance())
            if token.text == "super":
                return syn.SuperExpr(self._advance())
            if token.text == "new":
                return self._parse_creator()
            if token.text in PRIMITIVE_TYPES or token.text == "void":
                keyword = self._advance()
                self._expect_text(".", "after primitive type in expression")
                self._expect_text("class", "after '.'")
                return syn.ClassLiteralExpr(None, keyword)
        if token.text == "(":
            self._advance()
            inner = self._parse_expression()
            self._expect_text(")", "after parenthesized expression")
            return syn.ParenExpr(inner)
        raise self._fail("expected expression")

    def _parse_creator(self) -> syn.Expr:
        new_token = self._advance()
        type_text = self._parse_type("after 'new'")
        if self._check("("):
            arguments = self._parse_arguments()
            if self._check("{"):
                self._warn_at("unsupported construct: anonymous class body (skipped)", self._peek())  # type: ignore[arg-type]
                self._skip_balanced("{", "}")
            return syn.NewExpr(type_text, arguments, new_token)
        if self._check("[") or self._check("{"):
            dimensions: list[syn.Expr] = []
            while self._match("["):
                if not self._check("]"):
                    dimensions.append(self._parse_expression())
                self._expect_text("]", "in array creation")
            initializer = None
            if self._check("{"):
                initializer = self._parse_array_initializer()
            return syn.ArrayCreationExpr(type_text, dimensions, initializer, new_token)
        raise self._fail("expected constructor arguments or array dimensions after 'new'")

    def _parse_arguments(self) -> list[syn.Expr]:
        self._expect_text("(", "to open arguments")
        arguments: list[syn.Expr] = []
        if not self._check(")"):
            arguments.append(self._parse_expression())
            while self._match(","):
                arguments.append(self._parse_expression())
        self._expect_text(")", "to close arguments")
        return arguments

    def _parse_postfix(self, expression: syn.Expr) -> syn.Expr:
        while True:
            token = self._peek()
            if token is None:
                return expression
            if token.text == ".":
                after = self._peek(1)
                if after is not None and after.text == "class":
                    self.pos += 2
                    expression = syn.ClassLiteralExpr(expression, after)
                    continue
                self._advance()
                name = self._expect_identifier("after '.'")
                if self._check("("):
                    expression = syn.CallExpr(expression, name, self._parse_arguments())
                else:
                    expression = syn.FieldSelectExpr(expression, name)
                continue
            if token.text == "(":
                if isinstance(expression, syn.NameExpr):
                    expression = syn.CallExpr(None, expression.token, self._parse_arguments())
                    continue
                if isinstance(expression, (syn.ThisExpr, syn.SuperExpr)):
                    expression = syn.ConstructorDelegationExpr(expression.token, self._parse_arguments())
                    continue
                raise self._fail("expression is not callable")
            if token.text == "[":
                self._advance()
                index = self._parse_expression()
                self._expect_text("]", "after array index")
                expression = syn.IndexExpr(expression, index)
                continue
            if token.text in ("++", "--"):
                self._advance()
                expression = syn.UnaryExpr(token.text, expression, prefix=False)
                continue
            return expression


def parse_compilation_unit(
    tokens: list[Token], file: str = "<source>", strict: bool = True
) -> tuple[syn.CompilationUnit | None, list[Diagnostic]]:
    """Parse one file's tokens.

    Returns the unit plus diagnostics; in strict mode a syntax problem yields
    ``(None, diagnostics)`` with a single error, in lenient mode problems are
    warnings and the unit holds every declaration that survived recovery.
    """
    return _Parser(tokens, file, strict).parse_unit()

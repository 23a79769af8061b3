//! The line-oriented script language: one statement per line, `#` comments,
//! names bound exactly once and defined before use.

use std::collections::HashMap;
use std::fmt;

use biamalg_core::TransferProperty;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScriptError {
    pub line: usize,
    pub col: usize,
    pub message: String,
}

impl fmt::Display for ScriptError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.col, self.message)
    }
}

impl std::error::Error for ScriptError {}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RingExpr {
    Zmod { n: usize },
    PolyQuo { p: usize, vars: Vec<String>, relations: Vec<Vec<usize>> },
    Product { left: String, right: String },
    Quotient { ring: String, ideal: String },
    TrivExt { ring: String, module: String },
    BiAmalg { f: String, g: String, j: String, j_prime: String },
    Amalg { f: String, j: String },
    Duplicate { ring: String, ideal: String },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HomExpr {
    Id { ring: String },
    QuoMap { ring: String, ideal: String },
    InjectTrivext { ring: String, module: String },
    ProjectTrivext { ring: String },
    Compose { second: String, first: String },
    Table { domain: String, codomain: String, pairs: Vec<(String, String)> },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckProp {
    Local,
    Gaussian,
    Arithmetical,
    Prufer,
    TotalQuotients,
}

impl CheckProp {
    pub fn name(&self) -> &'static str {
        match self {
            CheckProp::Local => "local",
            CheckProp::Gaussian => "gaussian",
            CheckProp::Arithmetical => "arithmetical",
            CheckProp::Prufer => "prufer",
            CheckProp::TotalQuotients => "total_quotients",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VerifyKind {
    Thm21 { mode: TransferProperty, f: String, g: String, j: String, j_prime: String },
    Cor22 { mode: TransferProperty, f: String, j: String },
    Cor23 { mode: TransferProperty, ring: String, ideal: String },
    Prop24 { part: u8, f: String, g: String, j: String, j_prime: String },
    Prop26 { f: String, g: String, j: String, j_prime: String },
    Prop57 { f: String, g: String, j: String, j_prime: String, p: String },
}

impl VerifyKind {
    pub fn id(&self) -> String {
        match self {
            VerifyKind::Thm21 { .. } => "thm2.1".into(),
            VerifyKind::Cor22 { .. } => "cor2.2".into(),
            VerifyKind::Cor23 { .. } => "cor2.3".into(),
            VerifyKind::Prop24 { part, .. } => format!("prop2.4.{part}"),
            VerifyKind::Prop26 { .. } => "prop2.6".into(),
            VerifyKind::Prop57 { .. } => "prop5.7".into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Statement {
    Ring { name: String, expr: RingExpr },
    Module { name: String, ring: String, ideal: String, copies: usize },
    Ideal { name: String, ring: String, gens: Vec<String> },
    Hom { name: String, expr: HomExpr },
    Check { prop: CheckProp, ring: String },
    Verify { kind: VerifyKind },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Located {
    pub line: usize,
    pub statement: Statement,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Script {
    pub statements: Vec<Located>,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum NameKind {
    Ring,
    Module,
    Ideal,
    Hom,
}

impl NameKind {
    fn word(&self) -> &'static str {
        match self {
            NameKind::Ring => "ring",
            NameKind::Module => "module",
            NameKind::Ideal => "ideal",
            NameKind::Hom => "hom",
        }
    }
}

struct Token<'a> {
    text: &'a str,
    col: usize,
}

fn tokenize(line: &str) -> Vec<Token<'_>> {
    let code = match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    };
    let mut out = Vec::new();
    let mut start: Option<usize> = None;
    for (i, ch) in code.char_indices() {
        if ch.is_whitespace() {
            if let Some(s) = start.take() {
                out.push(Token { text: &code[s..i], col: s + 1 });
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        out.push(Token { text: &code[s..], col: s + 1 });
    }
    out
}

struct LineParser<'a> {
    line: usize,
    tokens: Vec<Token<'a>>,
    pos: usize,
}

impl<'a> LineParser<'a> {
    fn err(&self, col: usize, message: impl Into<String>) -> ScriptError {
        ScriptError { line: self.line, col, message: message.into() }
    }

    fn end_col(&self) -> usize {
        self.tokens.last().map(|t| t.col + t.text.len()).unwrap_or(1)
    }

    fn next(&mut self, what: &str) -> Result<&Token<'a>, ScriptError> {
        if self.pos < self.tokens.len() {
            self.pos += 1;
            Ok(&self.tokens[self.pos - 1])
        } else {
            Err(self.err(self.end_col(), format!("expected {what}")))
        }
    }

    fn next_str(&mut self, what: &str) -> Result<String, ScriptError> {
        Ok(self.next(what)?.text.to_string())
    }

    fn next_usize(&mut self, what: &str) -> Result<usize, ScriptError> {
        let t = self.next(what)?;
        let (text, col) = (t.text, t.col);
        text.parse()
            .map_err(|_| self.err(col, format!("expected {what}, found `{text}`")))
    }

    fn expect(&mut self, lit: &str) -> Result<(), ScriptError> {
        let t = self.next(&format!("`{lit}`"))?;
        let (text, col) = (t.text, t.col);
        if text == lit {
            Ok(())
        } else {
            Err(self.err(col, format!("expected `{lit}`, found `{text}`")))
        }
    }

    fn peek(&self) -> Option<&Token<'a>> {
        self.tokens.get(self.pos)
    }

    fn rest(&mut self) -> Vec<Token<'a>> {
        let out = self.tokens.split_off(self.pos);
        out
    }

    fn finish(&self) -> Result<(), ScriptError> {
        match self.peek() {
            None => Ok(()),
            Some(t) => {
                let (text, col) = (t.text, t.col);
                Err(self.err(col, format!("unexpected trailing token `{text}`")))
            }
        }
    }
}

/// Parses `x^2*y`-style monomials into exponent vectors over `vars`.
fn parse_monomial(
    lp: &LineParser<'_>,
    vars: &[String],
    text: &str,
    col: usize,
) -> Result<Vec<usize>, ScriptError> {
    let mut exps = vec![0usize; vars.len()];
    for factor in text.split('*') {
        let (var, exp) = match factor.split_once('^') {
            Some((v, e)) => {
                let exp: usize = e.parse().map_err(|_| {
                    lp.err(col, format!("bad exponent in monomial `{text}`"))
                })?;
                (v, exp)
            }
            None => (factor, 1),
        };
        let idx = vars.iter().position(|v| v == var).ok_or_else(|| {
            lp.err(col, format!("unknown variable `{var}` in monomial `{text}`"))
        })?;
        exps[idx] += exp;
    }
    Ok(exps)
}

fn parse_mode(lp: &mut LineParser<'_>) -> Result<TransferProperty, ScriptError> {
    let t = lp.next("`gaussian` or `prufer`")?;
    let (text, col) = (t.text, t.col);
    match text {
        "gaussian" => Ok(TransferProperty::Gaussian),
        "prufer" => Ok(TransferProperty::Prufer),
        other => Err(lp.err(col, format!("expected `gaussian` or `prufer`, found `{other}`"))),
    }
}

struct NameTable {
    kinds: HashMap<String, NameKind>,
}

impl NameTable {
    fn bind(&mut self, lp: &LineParser<'_>, name: &str, kind: NameKind) -> Result<(), ScriptError> {
        if self.kinds.contains_key(name) {
            return Err(lp.err(1, format!("name `{name}` is already bound")));
        }
        self.kinds.insert(name.to_string(), kind);
        Ok(())
    }

    fn check(&self, lp: &LineParser<'_>, name: &str, kind: NameKind) -> Result<(), ScriptError> {
        match self.kinds.get(name) {
            None => Err(lp.err(1, format!("use of undefined name `{name}`"))),
            Some(k) if *k == kind => Ok(()),
            Some(k) => Err(lp.err(
                1,
                format!("`{name}` is a {}, but a {} is required", k.word(), kind.word()),
            )),
        }
    }
}

pub fn parse_script(text: &str) -> Result<Script, ScriptError> {
    let mut statements = Vec::new();
    let mut names = NameTable { kinds: HashMap::new() };
    for (lineno, raw) in text.lines().enumerate() {
        let line = lineno + 1;
        let tokens = tokenize(raw);
        if tokens.is_empty() {
            continue;
        }
        let mut lp = LineParser { line, tokens, pos: 0 };
        let head = lp.next("statement keyword")?;
        let (head_text, head_col) = (head.text, head.col);
        let statement = match head_text {
            "ring" => parse_ring(&mut lp, &mut names)?,
            "module" => parse_module(&mut lp, &mut names)?,
            "ideal" => parse_ideal(&mut lp, &mut names)?,
            "hom" => parse_hom(&mut lp, &mut names)?,
            "check" => parse_check(&mut lp, &names)?,
            "verify" => parse_verify(&mut lp, &names)?,
            other => {
                return Err(lp.err(head_col, format!("unknown statement keyword `{other}`")));
            }
        };
        lp.finish()?;
        statements.push(Located { line, statement });
    }
    Ok(Script { statements })
}

fn parse_ring(lp: &mut LineParser<'_>, names: &mut NameTable) -> Result<Statement, ScriptError> {
    let name = lp.next_str("ring name")?;
    lp.expect("=")?;
    let ctor = lp.next("ring constructor")?;
    let (ctor_text, ctor_col) = (ctor.text, ctor.col);
    let expr = match ctor_text {
        "zmod" => RingExpr::Zmod { n: lp.next_usize("modulus")? },
        "polyquo" => {
            let p = lp.next_usize("prime modulus")?;
            let mut vars = Vec::new();
            loop {
                let t = lp.next("variable name or `:`")?;
                if t.text == ":" {
                    break;
                }
                vars.push(t.text.to_string());
            }
            if vars.is_empty() {
                return Err(lp.err(ctor_col, "polyquo needs at least one variable"));
            }
            let rel_tokens = lp.rest();
            let mut relations = Vec::new();
            for t in &rel_tokens {
                relations.push(parse_monomial(lp, &vars, t.text, t.col)?);
            }
            if relations.is_empty() {
                return Err(lp.err(ctor_col, "polyquo needs at least one relation"));
            }
            RingExpr::PolyQuo { p, vars, relations }
        }
        "product" => {
            let left = lp.next_str("ring name")?;
            let right = lp.next_str("ring name")?;
            names.check(lp, &left, NameKind::Ring)?;
            names.check(lp, &right, NameKind::Ring)?;
            RingExpr::Product { left, right }
        }
        "quotient" => {
            let ring = lp.next_str("ring name")?;
            let ideal = lp.next_str("ideal name")?;
            names.check(lp, &ring, NameKind::Ring)?;
            names.check(lp, &ideal, NameKind::Ideal)?;
            RingExpr::Quotient { ring, ideal }
        }
        "trivext" => {
            let ring = lp.next_str("ring name")?;
            let module = lp.next_str("module name")?;
            names.check(lp, &ring, NameKind::Ring)?;
            names.check(lp, &module, NameKind::Module)?;
            RingExpr::TrivExt { ring, module }
        }
        "biamalg" => {
            let f = lp.next_str("hom name")?;
            let g = lp.next_str("hom name")?;
            let j = lp.next_str("ideal name")?;
            let j_prime = lp.next_str("ideal name")?;
            names.check(lp, &f, NameKind::Hom)?;
            names.check(lp, &g, NameKind::Hom)?;
            names.check(lp, &j, NameKind::Ideal)?;
            names.check(lp, &j_prime, NameKind::Ideal)?;
            RingExpr::BiAmalg { f, g, j, j_prime }
        }
        "amalg" => {
            let f = lp.next_str("hom name")?;
            let j = lp.next_str("ideal name")?;
            names.check(lp, &f, NameKind::Hom)?;
            names.check(lp, &j, NameKind::Ideal)?;
            RingExpr::Amalg { f, j }
        }
        "duplicate" => {
            let ring = lp.next_str("ring name")?;
            let ideal = lp.next_str("ideal name")?;
            names.check(lp, &ring, NameKind::Ring)?;
            names.check(lp, &ideal, NameKind::Ideal)?;
            RingExpr::Duplicate { ring, ideal }
        }
        other => {
            return Err(lp.err(ctor_col, format!("unknown ring constructor `{other}`")));
        }
    };
    names.bind(lp, &name, NameKind::Ring)?;
    Ok(Statement::Ring { name, expr })
}

fn parse_module(lp: &mut LineParser<'_>, names: &mut NameTable) -> Result<Statement, ScriptError> {
    let name = lp.next_str("module name")?;
    lp.expect("=")?;
    lp.expect("cyclic")?;
    let ring = lp.next_str("ring name")?;
    let ideal = lp.next_str("ideal name")?;
    names.check(lp, &ring, NameKind::Ring)?;
    names.check(lp, &ideal, NameKind::Ideal)?;
    let copies = if lp.peek().is_some() {
        lp.expect("^")?;
        lp.next_usize("copy count")?
    } else {
        1
    };
    names.bind(lp, &name, NameKind::Module)?;
    Ok(Statement::Module { name, ring, ideal, copies })
}

fn parse_ideal(lp: &mut LineParser<'_>, names: &mut NameTable) -> Result<Statement, ScriptError> {
    let name = lp.next_str("ideal name")?;
    lp.expect("=")?;
    lp.expect("span")?;
    let ring = lp.next_str("ring name")?;
    names.check(lp, &ring, NameKind::Ring)?;
    let gens = lp.rest().iter().map(|t| t.text.to_string()).collect();
    names.bind(lp, &name, NameKind::Ideal)?;
    Ok(Statement::Ideal { name, ring, gens })
}

fn parse_hom(lp: &mut LineParser<'_>, names: &mut NameTable) -> Result<Statement, ScriptError> {
    let name = lp.next_str("hom name")?;
    lp.expect("=")?;
    let ctor = lp.next("hom constructor")?;
    let (ctor_text, ctor_col) = (ctor.text, ctor.col);
    let expr = match ctor_text {
        "id" => {
            let ring = lp.next_str("ring name")?;
            names.check(lp, &ring, NameKind::Ring)?;
            HomExpr::Id { ring }
        }
        "quomap" => {
            let ring = lp.next_str("ring name")?;
            let ideal = lp.next_str("ideal name")?;
            names.check(lp, &ring, NameKind::Ring)?;
            names.check(lp, &ideal, NameKind::Ideal)?;
            HomExpr::QuoMap { ring, ideal }
        }
        "inject_trivext" => {
            let ring = lp.next_str("ring name")?;
            let module = lp.next_str("module name")?;
            names.check(lp, &ring, NameKind::Ring)?;
            names.check(lp, &module, NameKind::Module)?;
            HomExpr::InjectTrivext { ring, module }
        }
        "project_trivext" => {
            let ring = lp.next_str("ring name")?;
            names.check(lp, &ring, NameKind::Ring)?;
            HomExpr::ProjectTrivext { ring }
        }
        "compose" => {
            let second = lp.next_str("hom name")?;
            let first = lp.next_str("hom name")?;
            names.check(lp, &second, NameKind::Hom)?;
            names.check(lp, &first, NameKind::Hom)?;
            HomExpr::Compose { second, first }
        }
        "table" => {
            let domain = lp.next_str("ring name")?;
            let codomain = lp.next_str("ring name")?;
            names.check(lp, &domain, NameKind::Ring)?;
            names.check(lp, &codomain, NameKind::Ring)?;
            let mut pairs = Vec::new();
            for t in lp.rest() {
                match t.text.split_once(':') {
                    Some((a, b)) if !a.is_empty() && !b.is_empty() => {
                        pairs.push((a.to_string(), b.to_string()));
                    }
                    _ => {
                        return Err(lp.err(
                            t.col,
                            format!("expected `from:to` pair, found `{}`", t.text),
                        ));
                    }
                }
            }
            HomExpr::Table { domain, codomain, pairs }
        }
        other => {
            return Err(lp.err(ctor_col, format!("unknown hom constructor `{other}`")));
        }
    };
    names.bind(lp, &name, NameKind::Hom)?;
    Ok(Statement::Hom { name, expr })
}

fn parse_check(lp: &mut LineParser<'_>, names: &NameTable) -> Result<Statement, ScriptError> {
    let t = lp.next("property name")?;
    let (text, col) = (t.text, t.col);
    let prop = match text {
        "local" => CheckProp::Local,
        "gaussian" => CheckProp::Gaussian,
        "arithmetical" => CheckProp::Arithmetical,
        "prufer" => CheckProp::Prufer,
        "total_quotients" => CheckProp::TotalQuotients,
        other => return Err(lp.err(col, format!("unknown property `{other}`"))),
    };
    let ring = lp.next_str("ring name")?;
    names.check(lp, &ring, NameKind::Ring)?;
    Ok(Statement::Check { prop, ring })
}

fn parse_verify(lp: &mut LineParser<'_>, names: &NameTable) -> Result<Statement, ScriptError> {
    let t = lp.next("criterion id")?;
    let (id, col) = (t.text, t.col);
    let hom = |lp: &mut LineParser<'_>| -> Result<String, ScriptError> {
        let n = lp.next_str("hom name")?;
        names.check(lp, &n, NameKind::Hom)?;
        Ok(n)
    };
    let ideal = |lp: &mut LineParser<'_>| -> Result<String, ScriptError> {
        let n = lp.next_str("ideal name")?;
        names.check(lp, &n, NameKind::Ideal)?;
        Ok(n)
    };
    let kind = match id {
        "thm2.1" => {
            let mode = parse_mode(lp)?;
            VerifyKind::Thm21 {
                mode,
                f: hom(lp)?,
                g: hom(lp)?,
                j: ideal(lp)?,
                j_prime: ideal(lp)?,
            }
        }
        "cor2.2" => {
            let mode = parse_mode(lp)?;
            VerifyKind::Cor22 { mode, f: hom(lp)?, j: ideal(lp)? }
        }
        "cor2.3" => {
            let mode = parse_mode(lp)?;
            let ring = lp.next_str("ring name")?;
            names.check(lp, &ring, NameKind::Ring)?;
            VerifyKind::Cor23 { mode, ring, ideal: ideal(lp)? }
        }
        "prop2.4.1" | "prop2.4.2" | "prop2.4.3" => VerifyKind::Prop24 {
            part: id.as_bytes()[id.len() - 1] - b'0',
            f: hom(lp)?,
            g: hom(lp)?,
            j: ideal(lp)?,
            j_prime: ideal(lp)?,
        },
        "prop2.6" => VerifyKind::Prop26 {
            f: hom(lp)?,
            g: hom(lp)?,
            j: ideal(lp)?,
            j_prime: ideal(lp)?,
        },
        "prop5.7" => VerifyKind::Prop57 {
            f: hom(lp)?,
            g: hom(lp)?,
            j: ideal(lp)?,
            j_prime: ideal(lp)?,
            p: ideal(lp)?,
        },
        other => return Err(lp.err(col, format!("unknown criterion `{other}`"))),
    };
    Ok(Statement::Verify { kind })
}

/// Renders a script back to canonical source text; parsing the result gives
/// an equivalent script.
pub fn render_script(script: &Script) -> String {
    let mut out = String::new();
    for located in &script.statements {
        out.push_str(&render_statement(&located.statement));
        out.push('\n');
    }
    out
}

fn render_monomial(vars: &[String], exps: &[usize]) -> String {
    let parts: Vec<String> = vars
        .iter()
        .zip(exps)
        .filter(|(_, &e)| e > 0)
        .map(|(v, &e)| if e == 1 { v.clone() } else { format!("{v}^{e}") })
        .collect();
    parts.join("*")
}

pub fn render_statement(statement: &Statement) -> String {
    match statement {
        Statement::Ring { name, expr } => {
            let rhs = match expr {
                RingExpr::Zmod { n } => format!("zmod {n}"),
                RingExpr::PolyQuo { p, vars, relations } => {
                    let rels: Vec<String> =
                        relations.iter().map(|r| render_monomial(vars, r)).collect();
                    format!("polyquo {p} {} : {}", vars.join(" "), rels.join(" "))
                }
                RingExpr::Product { left, right } => format!("product {left} {right}"),
                RingExpr::Quotient { ring, ideal } => format!("quotient {ring} {ideal}"),
                RingExpr::TrivExt { ring, module } => format!("trivext {ring} {module}"),
                RingExpr::BiAmalg { f, g, j, j_prime } => {
                    format!("biamalg {f} {g} {j} {j_prime}")
                }
                RingExpr::Amalg { f, j } => format!("amalg {f} {j}"),
                RingExpr::Duplicate { ring, ideal } => format!("duplicate {ring} {ideal}"),
            };
            format!("ring {name} = {rhs}")
        }
        Statement::Module { name, ring, ideal, copies } => {
            if *copies == 1 {
                format!("module {name} = cyclic {ring} {ideal}")
            } else {
                format!("module {name} = cyclic {ring} {ideal} ^ {copies}")
            }
        }
        Statement::Ideal { name, ring, gens } => {
            let mut s = format!("ideal {name} = span {ring}");
            for g in gens {
                s.push(' ');
                s.push_str(g);
            }
            s
        }
        Statement::Hom { name, expr } => {
            let rhs = match expr {
                HomExpr::Id { ring } => format!("id {ring}"),
                HomExpr::QuoMap { ring, ideal } => format!("quomap {ring} {ideal}"),
                HomExpr::InjectTrivext { ring, module } => {
                    format!("inject_trivext {ring} {module}")
                }
                HomExpr::ProjectTrivext { ring } => format!("project_trivext {ring}"),
                HomExpr::Compose { second, first } => format!("compose {second} {first}"),
                HomExpr::Table { domain, codomain, pairs } => {
                    let mut s = format!("table {domain} {codomain}");
                    for (a, b) in pairs {
                        s.push_str(&format!(" {a}:{b}"));
                    }
                    s
                }
            };
            format!("hom {name} = {rhs}")
        }
        Statement::Check { prop, ring } => format!("check {} {ring}", prop.name()),
        Statement::Verify { kind } => match kind {
            VerifyKind::Thm21 { mode, f, g, j, j_prime } => {
                format!("verify thm2.1 {} {f} {g} {j} {j_prime}", mode.name())
            }
            VerifyKind::Cor22 { mode, f, j } => {
                format!("verify cor2.2 {} {f} {j}", mode.name())
            }
            VerifyKind::Cor23 { mode, ring, ideal } => {
                format!("verify cor2.3 {} {ring} {ideal}", mode.name())
            }
            VerifyKind::Prop24 { part, f, g, j, j_prime } => {
                format!("verify prop2.4.{part} {f} {g} {j} {j_prime}")
            }
            VerifyKind::Prop26 { f, g, j, j_prime } => {
                format!("verify prop2.6 {f} {g} {j} {j_prime}")
            }
            VerifyKind::Prop57 { f, g, j, j_prime, p } => {
                format!("verify prop5.7 {f} {g} {j} {j_prime} {p}")
            }
        },
    }
}

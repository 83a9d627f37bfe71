use std::fmt;

/// Object-language formula.
///
/// `Under(a, c)` is `a\c` (denominator on the left), `Over(c, b)` is `c/b`
/// (denominator on the right).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Formula {
    Atom(String),
    Unit,
    Under(Box<Formula>, Box<Formula>),
    Over(Box<Formula>, Box<Formula>),
    Prod(Box<Formula>, Box<Formula>),
    Diamond(Box<Formula>),
    BoxInv(Box<Formula>),
    Bang(Box<Formula>),
}

impl Formula {
    pub fn atom(name: impl Into<String>) -> Formula {
        Formula::Atom(name.into())
    }

    pub fn under(den: Formula, num: Formula) -> Formula {
        Formula::Under(Box::new(den), Box::new(num))
    }

    pub fn over(num: Formula, den: Formula) -> Formula {
        Formula::Over(Box::new(num), Box::new(den))
    }

    pub fn prod(left: Formula, right: Formula) -> Formula {
        Formula::Prod(Box::new(left), Box::new(right))
    }

    pub fn diamond(body: Formula) -> Formula {
        Formula::Diamond(Box::new(body))
    }

    pub fn box_inv(body: Formula) -> Formula {
        Formula::BoxInv(Box::new(body))
    }

    pub fn bang(body: Formula) -> Formula {
        Formula::Bang(Box::new(body))
    }

    /// Right-nested product `f1·(f2·(…·fn))`; `None` for an empty list.
    pub fn prod_of(items: &[Formula]) -> Option<Formula> {
        let (last, init) = items.split_last()?;
        Some(
            init.iter()
                .rev()
                .fold(last.clone(), |acc, f| Formula::prod(f.clone(), acc)),
        )
    }

    /// Number of atom, unit and connective nodes.
    pub fn size(&self) -> usize {
        1 + self.children().iter().map(|c| c.size()).sum::<usize>()
    }

    pub fn children(&self) -> Vec<&Formula> {
        match self {
            Formula::Atom(_) | Formula::Unit => vec![],
            Formula::Under(a, b) | Formula::Over(a, b) | Formula::Prod(a, b) => vec![a, b],
            Formula::Diamond(a) | Formula::BoxInv(a) | Formula::Bang(a) => vec![a],
        }
    }

    pub fn is_bang(&self) -> bool {
        matches!(self, Formula::Bang(_))
    }

    pub fn bang_body(&self) -> Option<&Formula> {
        match self {
            Formula::Bang(a) => Some(a),
            _ => None,
        }
    }

    /// Subformula at a child-index path (0 = left/only child, 1 = right child).
    pub fn at(&self, sub: &[usize]) -> Option<&Formula> {
        let mut cur = self;
        for &k in sub {
            cur = *cur.children().get(k)?;
        }
        Some(cur)
    }

    /// Every subformula occurrence, preorder, including `self`.
    pub fn subformulas(&self) -> Vec<&Formula> {
        let mut out = vec![self];
        for c in self.children() {
            out.extend(c.subformulas());
        }
        out
    }

    pub fn has_bracket_modality(&self) -> bool {
        self.subformulas()
            .iter()
            .any(|f| matches!(f, Formula::Diamond(_) | Formula::BoxInv(_)))
    }

    pub fn has_bang(&self) -> bool {
        self.subformulas().iter().any(|f| f.is_bang())
    }

    /// Replace every atom named `name` by `by`.
    pub fn substitute(&self, name: &str, by: &Formula) -> Formula {
        match self {
            Formula::Atom(n) if n == name => by.clone(),
            Formula::Atom(_) | Formula::Unit => self.clone(),
            Formula::Under(a, b) => Formula::under(a.substitute(name, by), b.substitute(name, by)),
            Formula::Over(a, b) => Formula::over(a.substitute(name, by), b.substitute(name, by)),
            Formula::Prod(a, b) => Formula::prod(a.substitute(name, by), b.substitute(name, by)),
            Formula::Diamond(a) => Formula::diamond(a.substitute(name, by)),
            Formula::BoxInv(a) => Formula::box_inv(a.substitute(name, by)),
            Formula::Bang(a) => Formula::bang(a.substitute(name, by)),
        }
    }
}

fn is_division(f: &Formula) -> bool {
    matches!(f, Formula::Under(..) | Formula::Over(..))
}

fn write_prefix_operand(f: &Formula, out: &mut fmt::Formatter<'_>) -> fmt::Result {
    match f {
        Formula::Atom(_)
        | Formula::Unit
        | Formula::Diamond(_)
        | Formula::BoxInv(_)
        | Formula::Bang(_) => write!(out, "{f}"),
        _ => write!(out, "({f})"),
    }
}

fn write_division_operand(f: &Formula, out: &mut fmt::Formatter<'_>) -> fmt::Result {
    if is_division(f) {
        write!(out, "({f})")
    } else {
        write!(out, "{f}")
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Formula::Atom(n) => write!(out, "{n}"),
            Formula::Unit => write!(out, "1"),
            Formula::Diamond(a) => {
                write!(out, "<>")?;
                write_prefix_operand(a, out)
            }
            Formula::BoxInv(a) => {
                write!(out, "[]-1")?;
                write_prefix_operand(a, out)
            }
            Formula::Bang(a) => {
                write!(out, "!")?;
                write_prefix_operand(a, out)
            }
            // `*` is right-associative and binds tighter than the divisions.
            Formula::Prod(a, b) => {
                if is_division(a) || matches!(**a, Formula::Prod(..)) {
                    write!(out, "({a})")?;
                } else {
                    write!(out, "{a}")?;
                }
                write!(out, "*")?;
                write_division_operand(b, out)
            }
            Formula::Under(a, c) => {
                write_division_operand(a, out)?;
                write!(out, "\\")?;
                write_division_operand(c, out)
            }
            Formula::Over(c, b) => {
                write_division_operand(c, out)?;
                write!(out, "/")?;
                write_division_operand(b, out)
            }
        }
    }
}

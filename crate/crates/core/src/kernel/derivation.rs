use std::fmt;

use serde::{Deserialize, Serialize};

use crate::syntax::{parse_formula, parse_sequent, Position, Sequent};

use super::rule::{RuleId, RuleInstance};

/// A derivation tree: conclusion, the rule instance applied to it, and one
/// subderivation per premise.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Derivation {
    pub conclusion: Sequent,
    pub rule: RuleInstance,
    pub premises: Vec<Derivation>,
}

impl Derivation {
    pub fn new(conclusion: Sequent, rule: RuleInstance, premises: Vec<Derivation>) -> Derivation {
        Derivation {
            conclusion,
            rule,
            premises,
        }
    }

    pub fn leaf(conclusion: Sequent, rule: RuleInstance) -> Derivation {
        Derivation::new(conclusion, rule, vec![])
    }

    /// Number of rule applications.
    pub fn size(&self) -> usize {
        1 + self.premises.iter().map(|p| p.size()).sum::<usize>()
    }

    pub fn depth(&self) -> usize {
        1 + self.premises.iter().map(|p| p.depth()).max().unwrap_or(0)
    }

    pub fn count_rule(&self, pred: &dyn Fn(RuleId) -> bool) -> usize {
        usize::from(pred(self.rule.rule))
            + self.premises.iter().map(|p| p.count_rule(pred)).sum::<usize>()
    }

    pub fn cut_count(&self) -> usize {
        self.count_rule(&|r| r == RuleId::Cut)
    }

    pub fn is_cut_free(&self) -> bool {
        self.cut_count() == 0
    }

    pub fn uses(&self, rule: RuleId) -> bool {
        self.count_rule(&|r| r == rule) > 0
    }

    /// Every node with its path (premise indices from the root), preorder.
    pub fn nodes(&self) -> Vec<(Vec<usize>, &Derivation)> {
        let mut out = Vec::new();
        self.collect(&mut vec![], &mut out);
        out
    }

    fn collect<'a>(&'a self, path: &mut Vec<usize>, out: &mut Vec<(Vec<usize>, &'a Derivation)>) {
        out.push((path.clone(), self));
        for (i, p) in self.premises.iter().enumerate() {
            path.push(i);
            p.collect(path, out);
            path.pop();
        }
    }

    pub fn subtree(&self, path: &[usize]) -> Option<&Derivation> {
        let mut cur = self;
        for &i in path {
            cur = cur.premises.get(i)?;
        }
        Some(cur)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(Node::from(self)).expect("derivation serializes")
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Derivation, String> {
        let n: Node = serde_json::from_value(v.clone()).map_err(|e| e.to_string())?;
        n.into_derivation()
    }

    /// Indented inference tree, conclusion first, one sequent per line.
    pub fn render(&self) -> String {
        let mut out = String::new();
        self.render_into(0, &mut out);
        out
    }

    fn render_into(&self, depth: usize, out: &mut String) {
        let params = serde_json::to_string(&Params::from(&self.rule)).expect("params serialize");
        out.push_str(&format!("{}{} :: {}\n", "  ".repeat(depth), self.conclusion, params));
        for p in &self.premises {
            p.render_into(depth + 1, out);
        }
    }

    /// Inverse of [`Derivation::render`].
    pub fn parse_rendered(text: &str) -> Result<Derivation, String> {
        let mut lines = Vec::new();
        for (no, line) in text.lines().enumerate() {
            if line.trim().is_empty() {
                continue;
            }
            let indent = line.len() - line.trim_start_matches(' ').len();
            if indent % 2 != 0 {
                return Err(format!("line {}: odd indentation", no + 1));
            }
            let (seq, params) = line
                .trim_start()
                .split_once(" :: ")
                .ok_or_else(|| format!("line {}: missing ` :: `", no + 1))?;
            let conclusion = parse_sequent(seq).map_err(|e| format!("line {}: {e}", no + 1))?;
            let params: Params =
                serde_json::from_str(params).map_err(|e| format!("line {}: {e}", no + 1))?;
            lines.push((indent / 2, conclusion, params.into_instance()?));
        }
        let mut at = 0;
        let d = build(&lines, &mut at, 0)?;
        if at != lines.len() {
            return Err("trailing lines after the derivation".into());
        }
        Ok(d)
    }
}

type Line = (usize, Sequent, RuleInstance);

fn build(lines: &[Line], at: &mut usize, depth: usize) -> Result<Derivation, String> {
    let (d, concl, inst) = lines.get(*at).ok_or("unexpected end of derivation")?;
    if *d != depth {
        return Err(format!("line {}: unexpected indentation", *at + 1));
    }
    *at += 1;
    let mut premises = Vec::new();
    while *at < lines.len() && lines[*at].0 == depth + 1 {
        premises.push(build(lines, at, depth + 1)?);
    }
    Ok(Derivation::new(concl.clone(), inst.clone(), premises))
}

impl fmt::Display for Derivation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

#[derive(Serialize, Deserialize)]
struct Params {
    rule: String,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    node: Vec<usize>,
    #[serde(default, skip_serializing_if = "is_zero")]
    index: usize,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    splits: Vec<usize>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    perm: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    cut_formula: Option<String>,
}

fn is_zero(n: &usize) -> bool {
    *n == 0
}

impl From<&RuleInstance> for Params {
    fn from(r: &RuleInstance) -> Params {
        Params {
            rule: r.rule.to_string(),
            node: r.at.node.clone(),
            index: r.at.index,
            splits: r.splits.clone(),
            perm: r.perm_map.clone(),
            cut_formula: r.cut_formula.as_ref().map(|f| f.to_string()),
        }
    }
}

impl Params {
    fn into_instance(self) -> Result<RuleInstance, String> {
        let cut_formula = match self.cut_formula {
            Some(t) => Some(parse_formula(&t).map_err(|e| e.to_string())?),
            None => None,
        };
        Ok(RuleInstance {
            rule: self.rule.parse()?,
            at: Position::new(self.node, self.index),
            splits: self.splits,
            perm_map: self.perm,
            cut_formula,
        })
    }
}

#[derive(Serialize, Deserialize)]
struct Node {
    conclusion: String,
    #[serde(flatten)]
    params: Params,
    #[serde(default)]
    premises: Vec<Node>,
}

impl From<&Derivation> for Node {
    fn from(d: &Derivation) -> Node {
        Node {
            conclusion: d.conclusion.to_string(),
            params: Params::from(&d.rule),
            premises: d.premises.iter().map(Node::from).collect(),
        }
    }
}

impl Node {
    fn into_derivation(self) -> Result<Derivation, String> {
        let conclusion = parse_sequent(&self.conclusion).map_err(|e| e.to_string())?;
        let rule = self.params.into_instance()?;
        let premises = self
            .premises
            .into_iter()
            .map(Node::into_derivation)
            .collect::<Result<_, _>>()?;
        Ok(Derivation::new(conclusion, rule, premises))
    }
}

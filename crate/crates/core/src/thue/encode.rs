use crate::kernel::System;
use crate::syntax::{Config, Formula, Sequent};

use super::grammar::{Grammar, GrammarError};

fn atoms(w: &[String]) -> Vec<Formula> {
    w.iter().map(|s| Formula::atom(s.as_str())).collect()
}

/// The formulae, contexts and theory a grammar is encoded by.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EncodingBundle {
    /// `B_i = (u₁·…·u_k) / (v₁·…·v_m)` for production `u ⇒ v`.
    pub b_list: Vec<Formula>,
    /// `!B₁, …, !Bₙ`
    pub gamma: Config,
    /// `!(1 / !B₁), …`
    pub phi: Config,
    /// `![]-1 B₁, …`
    pub gamma_tilde: Config,
    /// `!(1 / ![]-1 B₁), …`
    pub phi_tilde: Config,
    /// `v₁, …, v_m => u₁·…·u_k`
    pub theory: Vec<Sequent>,
}

pub fn encode(g: &Grammar) -> EncodingBundle {
    let mut b_list = Vec::new();
    let mut theory = Vec::new();
    for p in &g.productions {
        let u = Formula::prod_of(&atoms(&p.lhs)).expect("nonempty side");
        let v = Formula::prod_of(&atoms(&p.rhs)).expect("nonempty side");
        b_list.push(Formula::over(u.clone(), v));
        theory.push(Sequent::new(Config::leaves(atoms(&p.rhs)), u));
    }
    let unit_over = |f: Formula| Formula::bang(Formula::over(Formula::Unit, f));
    let gamma = Config::leaves(b_list.iter().cloned().map(Formula::bang));
    let gamma_tilde = Config::leaves(
        b_list
            .iter()
            .cloned()
            .map(|b| Formula::bang(Formula::box_inv(b))),
    );
    let phi = Config::leaves(gamma.flat_formulas().into_iter().cloned().map(unit_over));
    let phi_tilde = Config::leaves(
        gamma_tilde
            .flat_formulas()
            .into_iter()
            .cloned()
            .map(unit_over),
    );
    EncodingBundle {
        b_list,
        gamma,
        phi,
        gamma_tilde,
        phi_tilde,
        theory,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Variant {
    /// `Φ̃, Γ̃, w => s` in `BL1`
    Bracketed,
    /// `Φ, Γ, w => s` in `L1Bang`
    Plain,
    /// `Γ, w => s` in `L1BangW`
    Weak,
    /// `w => s` in `L1` with the grammar's theory
    Theory,
}

impl Variant {
    pub const ALL: [Variant; 4] = [Variant::Bracketed, Variant::Plain, Variant::Weak, Variant::Theory];
}

pub fn goal_sequent(g: &Grammar, w: &[String], variant: Variant) -> Result<(Sequent, System), GrammarError> {
    g.check_terminal_word(w)?;
    let e = encode(g);
    let mut items = Vec::new();
    let sys = match variant {
        Variant::Bracketed => {
            items.extend(e.phi_tilde.items);
            items.extend(e.gamma_tilde.items);
            System::BL1
        }
        Variant::Plain => {
            items.extend(e.phi.items);
            items.extend(e.gamma.items);
            System::L1Bang
        }
        Variant::Weak => {
            items.extend(e.gamma.items);
            System::L1BangW
        }
        Variant::Theory => System::L1Theory(e.theory),
    };
    items.extend(Config::leaves(atoms(w)).items);
    Ok((
        Sequent::new(Config::new(items), Formula::atom(g.start.as_str())),
        sys,
    ))
}

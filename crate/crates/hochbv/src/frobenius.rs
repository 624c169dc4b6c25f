//! Graded open Frobenius algebras given by structure constants.

use std::collections::BTreeMap;
use std::fmt;

use exactlinalg::{rank, solve, Field, Solution, SparseMatrix};
use serde::Serialize;

use crate::comb::LinComb;
use crate::AlgebraError;

/// Element of A in the basis, keyed by basis index.
pub type Elem<F> = LinComb<usize, F>;
/// Element of A ⊗ A.
pub type Elem2<F> = LinComb<(usize, usize), F>;
/// Element of A ⊗ A ⊗ A.
pub type Elem3<F> = LinComb<(usize, usize, usize), F>;

/// Raw description of an algebra, as read from a file.
#[derive(Clone, Debug, Default)]
pub struct AlgebraData<F> {
    pub names: Vec<String>,
    pub degrees: Vec<i64>,
    pub m: i64,
    /// `(i, j, k, c)`: `e_i e_j` has `c` in `e_k`. Products with the unit are implicit.
    pub product: Vec<(usize, usize, usize, F)>,
    /// `(i, k, c)`: `d e_i` has `c` in `e_k`.
    pub differential: Vec<(usize, usize, F)>,
    /// `(i, j, k, c)`: `δ(e_i)` has `c` in `e_j ⊗ e_k`.
    pub coproduct: Vec<(usize, usize, usize, F)>,
    pub pairing: Option<Vec<(usize, usize, F)>>,
    pub counit: Option<Vec<(usize, F)>>,
}

#[derive(Clone, Debug)]
pub struct FrobeniusAlgebra<F> {
    names: Vec<String>,
    degrees: Vec<i64>,
    m: i64,
    product: Vec<Vec<Vec<(usize, F)>>>,
    differential: Vec<Vec<(usize, F)>>,
    coproduct: Vec<Vec<(usize, usize, F)>>,
    pairing: Option<Vec<Vec<F>>>,
    counit: Option<Vec<F>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Level {
    Dga,
    Open,
    SymmetricOpen,
    Commutative,
}

impl std::str::FromStr for Level {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "dga" => Ok(Level::Dga),
            "open" => Ok(Level::Open),
            "symmetric_open" => Ok(Level::SymmetricOpen),
            "commutative" => Ok(Level::Commutative),
            _ => Err(format!("unknown level {s:?}")),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomResult {
    pub axiom: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub results: Vec<AxiomResult>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.results.iter().all(|r| r.status != Status::Fail)
    }

    pub fn get(&self, axiom: &str) -> Option<&AxiomResult> {
        self.results.iter().find(|r| r.axiom == axiom)
    }

    fn push(&mut self, axiom: &str, counterexample: Option<Vec<String>>) {
        let status = if counterexample.is_some() { Status::Fail } else { Status::Pass };
        self.results.push(AxiomResult { axiom: axiom.into(), status, counterexample });
    }

    fn skip(&mut self, axiom: &str) {
        self.results.push(AxiomResult { axiom: axiom.into(), status: Status::Skipped, counterexample: None });
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.results {
            write!(f, "{:<24} {:?}", r.axiom, r.status)?;
            if let Some(c) = &r.counterexample {
                write!(f, " at ({})", c.join(", "))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

impl<F: Field> FrobeniusAlgebra<F> {
    pub fn new(data: AlgebraData<F>) -> Result<Self, AlgebraError> {
        let n = data.names.len();
        if n == 0 {
            return Err(AlgebraError::Structure("empty basis".into()));
        }
        if data.degrees.len() != n {
            return Err(AlgebraError::Structure(format!("{} names but {} degrees", n, data.degrees.len())));
        }
        if data.degrees[0] != 0 {
            return Err(AlgebraError::Structure("basis element 0 is the unit and must have degree 0".into()));
        }
        if let Some(i) = data.degrees.iter().position(|&d| d < 0) {
            return Err(AlgebraError::Structure(format!("negative degree for {}", data.names[i])));
        }
        for (i, a) in data.names.iter().enumerate() {
            if data.names[..i].contains(a) {
                return Err(AlgebraError::Structure(format!("duplicate basis name {a:?}")));
            }
        }
        let deg = &data.degrees;
        let idx = |table: &str, i: usize| -> Result<(), AlgebraError> {
            if i < n {
                Ok(())
            } else {
                Err(AlgebraError::Index { table: table.into(), index: i })
            }
        };
        let degree_err = |table: &str, what: String| AlgebraError::Degree { table: table.into(), entry: what };

        let mut prod: Vec<Vec<BTreeMap<usize, F>>> = vec![vec![BTreeMap::new(); n]; n];
        for (i, j, k, c) in data.product {
            idx("product", i)?;
            idx("product", j)?;
            idx("product", k)?;
            if i == 0 || j == 0 {
                return Err(AlgebraError::Structure("products with the unit are implicit".into()));
            }
            if deg[k] != deg[i] + deg[j] {
                return Err(degree_err("product", format!("{} * {} -> {}", data.names[i], data.names[j], data.names[k])));
            }
            *prod[i][j].entry(k).or_insert_with(F::zero) += c;
        }
        for (i, row) in prod.iter_mut().enumerate() {
            row[0].insert(i, F::one());
        }
        for j in 0..n {
            prod[0][j] = BTreeMap::from([(j, F::one())]);
        }
        let product = prod
            .into_iter()
            .map(|row| row.into_iter().map(|e| e.into_iter().filter(|(_, c)| !c.is_zero()).collect()).collect())
            .collect();

        let mut diff: Vec<BTreeMap<usize, F>> = vec![BTreeMap::new(); n];
        for (i, k, c) in data.differential {
            idx("differential", i)?;
            idx("differential", k)?;
            if deg[k] != deg[i] + 1 {
                return Err(degree_err("differential", format!("d {} -> {}", data.names[i], data.names[k])));
            }
            *diff[i].entry(k).or_insert_with(F::zero) += c;
        }
        let differential = diff.into_iter().map(|e| e.into_iter().filter(|(_, c)| !c.is_zero()).collect()).collect();

        let mut cop: Vec<BTreeMap<(usize, usize), F>> = vec![BTreeMap::new(); n];
        for (i, j, k, c) in data.coproduct {
            idx("coproduct", i)?;
            idx("coproduct", j)?;
            idx("coproduct", k)?;
            if deg[j] + deg[k] != data.m + deg[i] {
                return Err(degree_err(
                    "coproduct",
                    format!("δ {} -> {} ⊗ {}", data.names[i], data.names[j], data.names[k]),
                ));
            }
            *cop[i].entry((j, k)).or_insert_with(F::zero) += c;
        }
        let coproduct = cop
            .into_iter()
            .map(|e| e.into_iter().filter(|(_, c)| !c.is_zero()).map(|((j, k), c)| (j, k, c)).collect())
            .collect();

        let pairing = match data.pairing {
            None => None,
            Some(entries) => {
                let mut p = vec![vec![F::zero(); n]; n];
                for (i, j, c) in entries {
                    idx("pairing", i)?;
                    idx("pairing", j)?;
                    if !c.is_zero() && deg[i] + deg[j] != data.m {
                        return Err(degree_err("pairing", format!("<{}, {}>", data.names[i], data.names[j])));
                    }
                    p[i][j] += c;
                }
                Some(p)
            }
        };
        let counit = match data.counit {
            None => None,
            Some(entries) => {
                let mut e = vec![F::zero(); n];
                for (i, c) in entries {
                    idx("counit", i)?;
                    if !c.is_zero() && deg[i] != data.m {
                        return Err(degree_err("counit", data.names[i].clone()));
                    }
                    e[i] += c;
                }
                Some(e)
            }
        };

        Ok(FrobeniusAlgebra {
            names: data.names,
            degrees: data.degrees,
            m: data.m,
            product,
            differential,
            coproduct,
            pairing,
            counit,
        })
    }

    /// Inverse of [`FrobeniusAlgebra::new`], used for serialization.
    pub fn to_data(&self) -> AlgebraData<F> {
        let n = self.dim();
        let mut product = Vec::new();
        for i in 1..n {
            for j in 1..n {
                for (k, c) in &self.product[i][j] {
                    product.push((i, j, *k, c.clone()));
                }
            }
        }
        let differential = (0..n).flat_map(|i| self.differential[i].iter().map(move |(k, c)| (i, *k, c.clone()))).collect();
        let coproduct = (0..n)
            .flat_map(|i| self.coproduct[i].iter().map(move |(j, k, c)| (i, *j, *k, c.clone())))
            .collect();
        let pairing = self.pairing.as_ref().map(|p| {
            let mut out = Vec::new();
            for (i, row) in p.iter().enumerate() {
                for (j, c) in row.iter().enumerate() {
                    if !c.is_zero() {
                        out.push((i, j, c.clone()));
                    }
                }
            }
            out
        });
        let counit = self
            .counit
            .as_ref()
            .map(|e| e.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (i, c.clone())).collect());
        AlgebraData {
            names: self.names.clone(),
            degrees: self.degrees.clone(),
            m: self.m,
            product,
            differential,
            coproduct,
            pairing,
            counit,
        }
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn m(&self) -> i64 {
        self.m
    }

    pub fn deg(&self, i: usize) -> i64 {
        self.degrees[i]
    }

    pub fn degrees(&self) -> &[i64] {
        &self.degrees
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// `e_i e_j`.
    pub fn mul(&self, i: usize, j: usize) -> &[(usize, F)] {
        &self.product[i][j]
    }

    /// `d e_i`.
    pub fn d(&self, i: usize) -> &[(usize, F)] {
        &self.differential[i]
    }

    /// Sweedler terms `(x', x'', c)` of `δ(e_i)`.
    pub fn cop(&self, i: usize) -> &[(usize, usize, F)] {
        &self.coproduct[i]
    }

    pub fn pairing(&self, i: usize, j: usize) -> Option<F> {
        self.pairing.as_ref().map(|p| p[i][j].clone())
    }

    pub fn has_pairing(&self) -> bool {
        self.pairing.is_some()
    }

    pub fn counit(&self, i: usize) -> Option<F> {
        self.counit.as_ref().map(|e| e[i].clone())
    }

    pub fn has_zero_differential(&self) -> bool {
        self.differential.iter().all(Vec::is_empty)
    }

    pub fn basis(&self, i: usize) -> Elem<F> {
        Elem::single(i, F::one())
    }

    pub fn mul_elem(&self, x: &Elem<F>, y: &Elem<F>) -> Elem<F> {
        let mut out = Elem::new();
        for (i, a) in x {
            for (j, b) in y {
                for (k, c) in self.mul(*i, *j) {
                    out.add_term(*k, a.clone() * b.clone() * c.clone());
                }
            }
        }
        out
    }

    pub fn d_elem(&self, x: &Elem<F>) -> Elem<F> {
        x.apply(|&i| self.d(i).iter().cloned().collect())
    }

    pub fn cop_elem(&self, x: &Elem<F>) -> Elem2<F> {
        x.apply(|&i| self.cop(i).iter().map(|(j, k, c)| ((*j, *k), c.clone())).collect())
    }

    /// Graded commutativity `xy = (-1)^{|x||y|} yx` on basis pairs.
    pub fn is_commutative(&self) -> bool {
        self.commutativity_counterexample().is_none()
    }

    fn commutativity_counterexample(&self) -> Option<Vec<String>> {
        let n = self.dim();
        for i in 0..n {
            for j in 0..n {
                let xy: Elem<F> = self.mul(i, j).iter().cloned().collect();
                let yx: Elem<F> = self.mul(j, i).iter().cloned().collect();
                if xy != yx.signed(self.deg(i) * self.deg(j)) {
                    return Some(self.tuple(&[i, j]));
                }
            }
        }
        None
    }

    fn tuple(&self, ids: &[usize]) -> Vec<String> {
        ids.iter().map(|&i| self.names[i].clone()).collect()
    }

    /// Checks every axiom up to `level` exhaustively on basis tuples.
    pub fn validate(&self, level: Level) -> ValidationReport {
        let mut r = ValidationReport { results: Vec::new() };
        r.push("d_squared", self.check_d_squared());
        r.push("leibniz", self.check_leibniz());
        r.push("associativity", self.check_associativity());
        if level >= Level::Open {
            r.push("coassociativity", self.check_coassociativity());
            r.push("coproduct_chain_map", self.check_cop_chain_map());
            let (left, right) = self.check_frobenius();
            r.push("frobenius_left", left);
            r.push("frobenius_right", right);
        }
        if level >= Level::SymmetricOpen {
            r.push("symmetry", self.check_symmetry());
        }
        if level >= Level::Commutative {
            r.push("graded_commutativity", self.commutativity_counterexample());
        }
        r
    }

    fn check_d_squared(&self) -> Option<Vec<String>> {
        (0..self.dim()).find(|&i| !self.d_elem(&self.d_elem(&self.basis(i))).is_zero()).map(|i| self.tuple(&[i]))
    }

    fn check_leibniz(&self) -> Option<Vec<String>> {
        let n = self.dim();
        for i in 0..n {
            for j in 0..n {
                let (x, y) = (self.basis(i), self.basis(j));
                let lhs = self.d_elem(&self.mul_elem(&x, &y));
                let mut rhs = self.mul_elem(&self.d_elem(&x), &y);
                rhs.add_comb(&self.mul_elem(&x, &self.d_elem(&y)).signed(self.deg(i)));
                if lhs != rhs {
                    return Some(self.tuple(&[i, j]));
                }
            }
        }
        None
    }

    fn check_associativity(&self) -> Option<Vec<String>> {
        let n = self.dim();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let (x, y, z) = (self.basis(i), self.basis(j), self.basis(k));
                    if self.mul_elem(&self.mul_elem(&x, &y), &z) != self.mul_elem(&x, &self.mul_elem(&y, &z)) {
                        return Some(self.tuple(&[i, j, k]));
                    }
                }
            }
        }
        None
    }

    /// `(δ⊗1)δ = (-1)^m (1⊗δ)δ`, with `(1⊗δ)(a⊗b) = (-1)^{m|a|} a⊗δb`.
    fn check_coassociativity(&self) -> Option<Vec<String>> {
        for x in 0..self.dim() {
            let mut l = Elem3::new();
            let mut r = Elem3::new();
            for (j, k, c) in self.cop(x) {
                for (j2, k2, c2) in self.cop(*j) {
                    l.add_term((*j2, *k2, *k), c.clone() * c2.clone());
                }
                for (j2, k2, c2) in self.cop(*k) {
                    r.add_signed((*j, *j2, *k2), c.clone() * c2.clone(), self.m * self.deg(*j) + self.m);
                }
            }
            if l != r {
                return Some(self.tuple(&[x]));
            }
        }
        None
    }

    /// `δ d = (-1)^m (d⊗1 + 1⊗d) δ`.
    fn check_cop_chain_map(&self) -> Option<Vec<String>> {
        for x in 0..self.dim() {
            let l = self.cop_elem(&self.d_elem(&self.basis(x)));
            let mut r = Elem2::new();
            for (j, k, c) in self.cop(x) {
                for (dj, c2) in self.d(*j) {
                    r.add_signed((*dj, *k), c.clone() * c2.clone(), self.m);
                }
                for (dk, c2) in self.d(*k) {
                    r.add_signed((*j, *dk), c.clone() * c2.clone(), self.m + self.deg(*j));
                }
            }
            if l != r {
                return Some(self.tuple(&[x]));
            }
        }
        None
    }

    /// `δ(xy) = Σ (-1)^{m|x|} x y' ⊗ y''` and `δ(xy) = Σ x' ⊗ x'' y`.
    fn check_frobenius(&self) -> (Option<Vec<String>>, Option<Vec<String>>) {
        let n = self.dim();
        let (mut left, mut right) = (None, None);
        for x in 0..n {
            for y in 0..n {
                let lhs = self.cop_elem(&self.mul_elem(&self.basis(x), &self.basis(y)));
                if left.is_none() {
                    let mut r = Elem2::new();
                    for (j, k, c) in self.cop(y) {
                        for (z, c2) in self.mul(x, *j) {
                            r.add_signed((*z, *k), c.clone() * c2.clone(), self.m * self.deg(x));
                        }
                    }
                    if lhs != r {
                        left = Some(self.tuple(&[x, y]));
                    }
                }
                if right.is_none() {
                    let mut r = Elem2::new();
                    for (j, k, c) in self.cop(x) {
                        for (z, c2) in self.mul(*k, y) {
                            r.add_term((*j, *z), c.clone() * c2.clone());
                        }
                    }
                    if lhs != r {
                        right = Some(self.tuple(&[x, y]));
                    }
                }
            }
        }
        (left, right)
    }

    /// `δ(1) = Σ (-1)^{|1'||1''|+m} 1''⊗1'`.
    fn check_symmetry(&self) -> Option<Vec<String>> {
        let l = self.cop_elem(&self.basis(0));
        let mut r = Elem2::new();
        for (j, k, c) in self.cop(0) {
            r.add_signed((*k, *j), c.clone(), self.deg(*j) * self.deg(*k) + self.m);
        }
        l.first_difference(&r).map(|(j, k)| self.tuple(&[j, k]))
    }

    /// `c(z) = Σ (-1)^{|z''||z'|} z''z'`.
    pub fn central_element(&self, z: usize) -> Elem<F> {
        let mut out = Elem::new();
        for (p, q, c) in self.cop(z) {
            for (k, c2) in self.mul(*q, *p) {
                out.add_signed(*k, c.clone() * c2.clone(), self.deg(*p) * self.deg(*q));
            }
        }
        out
    }

    /// Cocommutativity, centrality of `c(z)` and, with a counit, the counit identities.
    pub fn check_propositions(&self) -> ValidationReport {
        let mut r = ValidationReport { results: Vec::new() };
        let n = self.dim();
        if self.is_commutative() {
            let mut bad = None;
            for x in 0..n {
                let l = self.cop_elem(&self.basis(x));
                let mut t = Elem2::new();
                for (j, k, c) in self.cop(x) {
                    t.add_signed((*k, *j), c.clone(), self.deg(*j) * self.deg(*k) + self.m);
                }
                if l != t {
                    bad = Some(self.tuple(&[x]));
                    break;
                }
            }
            r.push("cocommutativity", bad);
        } else {
            r.skip("cocommutativity");
        }

        let mut bad = None;
        'outer: for z in 0..n {
            let cz = self.central_element(z);
            for x in 0..n {
                let bx = self.basis(x);
                let l = self.mul_elem(&cz, &bx);
                let rr = self.mul_elem(&bx, &cz).signed((self.m + self.deg(z)) * self.deg(x));
                if l != rr {
                    bad = Some(self.tuple(&[z, x]));
                    break 'outer;
                }
            }
        }
        r.push("centrality", bad);

        match &self.counit {
            None => {
                r.skip("counit");
                r.skip("counit_via_unit");
                r.skip("counit_via_unit_signed");
                r.skip("counit_pairing");
            }
            Some(eta) => {
                let eta_of = |e: &Elem<F>| -> F {
                    e.iter().fold(F::zero(), |acc, (i, c)| acc + c.clone() * eta[*i].clone())
                };
                let m = self.m;
                let mut counit_bad = None;
                let mut unit_bad = None;
                let mut signed_bad = None;
                for x in 0..n {
                    let bx = self.basis(x);
                    let (mut a, mut b) = (Elem::new(), Elem::new());
                    for (p, q, c) in self.cop(x) {
                        a.add_signed(*q, c.clone() * eta[*p].clone(), m * self.deg(*p));
                        b.add_signed(*p, c.clone() * eta[*q].clone(), m * self.deg(*p));
                    }
                    if counit_bad.is_none() && (a != bx || b != bx) {
                        counit_bad = Some(self.tuple(&[x]));
                    }
                    let (mut a, mut b, mut s, mut t) = (Elem::new(), Elem::new(), Elem::new(), Elem::new());
                    for (p, q, c) in self.cop(0) {
                        let xp = eta_of(&self.mul_elem(&bx, &self.basis(*p)));
                        let qx = eta_of(&self.mul_elem(&self.basis(*q), &bx));
                        let px = eta_of(&self.mul_elem(&self.basis(*p), &bx));
                        let xq = eta_of(&self.mul_elem(&bx, &self.basis(*q)));
                        a.add_signed(*q, c.clone() * xp, m * self.deg(*p));
                        b.add_signed(*p, c.clone() * qx, m * self.deg(*p));
                        s.add_signed(*q, c.clone() * px, self.deg(*p));
                        t.add_signed(*p, c.clone() * xq, self.deg(*p));
                    }
                    if unit_bad.is_none() && (a != bx || b != bx) {
                        unit_bad = Some(self.tuple(&[x]));
                    }
                    if signed_bad.is_none() && (s != bx || t != bx) {
                        signed_bad = Some(self.tuple(&[x]));
                    }
                }
                r.push("counit", counit_bad);
                r.push("counit_via_unit", unit_bad);
                r.push("counit_via_unit_signed", signed_bad);
                match &self.pairing {
                    None => r.skip("counit_pairing"),
                    Some(p) => {
                        let mut bad = None;
                        'pair: for x in 0..n {
                            for y in 0..n {
                                if eta_of(&self.mul_elem(&self.basis(x), &self.basis(y))) != p[x][y] {
                                    bad = Some(self.tuple(&[x, y]));
                                    break 'pair;
                                }
                            }
                        }
                        r.push("counit_pairing", bad);
                    }
                }
            }
        }
        r
    }
}

/// Pairing-side input to [`derive_open_from_closed`].
#[derive(Clone, Debug)]
pub struct ClosedData<F> {
    pub names: Vec<String>,
    pub degrees: Vec<i64>,
    pub m: i64,
    pub product: Vec<(usize, usize, usize, F)>,
    pub differential: Vec<(usize, usize, F)>,
    pub pairing: Vec<(usize, usize, F)>,
}

/// Solves `⟨x, ab⟩ = Σ (-1)^{m|x'|} ⟨x'', a⟩⟨x', b⟩` for the coproduct. The counit is `η(x) = ⟨x, 1⟩`.
pub fn derive_open_from_closed<F: Field>(closed: ClosedData<F>) -> Result<FrobeniusAlgebra<F>, AlgebraError> {
    let base = FrobeniusAlgebra::new(AlgebraData {
        names: closed.names,
        degrees: closed.degrees,
        m: closed.m,
        product: closed.product,
        differential: closed.differential,
        coproduct: Vec::new(),
        pairing: Some(closed.pairing),
        counit: None,
    })?;
    let n = base.dim();
    let m = base.m;
    let pr = |i: usize, j: usize| base.pairing(i, j).expect("pairing present");
    let tup = |ids: &[usize]| base.tuple(ids);

    for d in base.degrees.iter().copied().collect::<std::collections::BTreeSet<_>>() {
        let rows: Vec<usize> = (0..n).filter(|&i| base.deg(i) == d).collect();
        let cols: Vec<usize> = (0..n).filter(|&j| base.deg(j) == m - d).collect();
        let gram: Vec<Vec<F>> = rows.iter().map(|&i| cols.iter().map(|&j| pr(i, j)).collect()).collect();
        if rows.len() != cols.len() || rank(&SparseMatrix::from_dense(&gram)) != rows.len() {
            return Err(AlgebraError::DegeneratePairing(format!("degree {d}")));
        }
    }
    for i in 0..n {
        for j in 0..n {
            if pr(i, j) != pr(j, i) * F::sign(base.deg(i) * base.deg(j)) {
                return Err(AlgebraError::PairingNotSymmetric(tup(&[i, j])));
            }
            let dx: Elem<F> = base.d(i).iter().cloned().collect();
            let dy: Elem<F> = base.d(j).iter().cloned().collect();
            let l = dx.iter().fold(F::zero(), |acc, (k, c)| acc + c.clone() * pr(*k, j));
            let r = dy.iter().fold(F::zero(), |acc, (k, c)| acc + c.clone() * pr(i, *k));
            if l != -(r * F::sign(base.deg(i))) {
                return Err(AlgebraError::PairingDifferential(tup(&[i, j])));
            }
            for k in 0..n {
                let xy = base.mul_elem(&base.basis(i), &base.basis(j));
                let yz = base.mul_elem(&base.basis(j), &base.basis(k));
                let l = xy.iter().fold(F::zero(), |acc, (t, c)| acc + c.clone() * pr(*t, k));
                let r = yz.iter().fold(F::zero(), |acc, (t, c)| acc + c.clone() * pr(i, *t));
                if l != r {
                    return Err(AlgebraError::PairingNotInvariant(tup(&[i, j, k])));
                }
            }
        }
    }

    let mut coproduct = Vec::new();
    for x in 0..n {
        let unknowns: Vec<(usize, usize)> = (0..n)
            .flat_map(|j| (0..n).map(move |k| (j, k)))
            .filter(|&(j, k)| base.deg(j) + base.deg(k) == m + base.deg(x))
            .collect();
        let mut trip = Vec::new();
        let mut rhs = Vec::new();
        let mut row = 0;
        for a in 0..n {
            for b in 0..n {
                let ab = base.mul(a, b);
                let v = ab.iter().fold(F::zero(), |acc, (k, c)| acc + c.clone() * pr(x, *k));
                if !v.is_zero() {
                    rhs.push((row, v));
                }
                for (col, &(j, k)) in unknowns.iter().enumerate() {
                    let c = pr(k, a) * pr(j, b) * F::sign(m * base.deg(j));
                    if !c.is_zero() {
                        trip.push((row, col, c));
                    }
                }
                row += 1;
            }
        }
        let sys = SparseMatrix::from_triplets(row, unknowns.len(), trip).expect("indices in range");
        if rank(&sys) != unknowns.len() {
            return Err(AlgebraError::DegeneratePairing(format!("coproduct of {} not determined", base.name(x))));
        }
        match solve(&sys, &rhs).expect("rhs in range") {
            Solution::Inconsistent => return Err(AlgebraError::PairingNotInvariant(tup(&[x]))),
            Solution::Solved(sol) => {
                for (col, c) in sol {
                    let (j, k) = unknowns[col];
                    coproduct.push((x, j, k, c));
                }
            }
        }
    }
    let mut data = base.to_data();
    data.coproduct = coproduct;
    data.counit = Some((0..n).map(|i| (i, pr(i, 0))).filter(|(_, c)| !c.is_zero()).collect());
    FrobeniusAlgebra::new(data)
}

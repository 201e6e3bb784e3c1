//! Exact scalars of the q-deformed algebra: Laurent polynomials in the bases
//! `q_{z+}, q_{z−}, q_γ, q_ξ` (and the polynomial parameter `λ`) over
//! products of cyclotomic polynomials in single bases.

use std::collections::BTreeMap;
use std::fmt;

use crate::scalar::GaussianRational;

/// Symbols of the scalar ring: the four q-bases, then `λ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum QVar {
    ZPlus = 0,
    ZMinus = 1,
    Gamma = 2,
    Xi = 3,
    Lambda = 4,
}

pub const NVARS: usize = 5;

impl QVar {
    pub const ALL: [QVar; NVARS] = [
        QVar::ZPlus,
        QVar::ZMinus,
        QVar::Gamma,
        QVar::Xi,
        QVar::Lambda,
    ];
    pub const BASES: [QVar; 4] = [QVar::ZPlus, QVar::ZMinus, QVar::Gamma, QVar::Xi];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn symbol(self) -> &'static str {
        match self {
            QVar::ZPlus => "q_z+",
            QVar::ZMinus => "q_z-",
            QVar::Gamma => "q_gamma",
            QVar::Xi => "q_xi",
            QVar::Lambda => "lambda",
        }
    }

    /// Short name used in CLI flags and reports.
    pub fn name(self) -> &'static str {
        match self {
            QVar::ZPlus => "z_plus",
            QVar::ZMinus => "z_minus",
            QVar::Gamma => "gamma",
            QVar::Xi => "xi",
            QVar::Lambda => "lambda",
        }
    }
}

pub type Exps = [i32; NVARS];

/// Laurent polynomial with Gaussian-rational coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LPoly {
    terms: BTreeMap<Exps, GaussianRational>,
}

impl LPoly {
    pub fn zero() -> LPoly {
        LPoly::default()
    }

    pub fn constant(c: GaussianRational) -> LPoly {
        LPoly::monomial([0; NVARS], c)
    }

    pub fn one() -> LPoly {
        LPoly::constant(GaussianRational::ONE)
    }

    pub fn monomial(e: Exps, c: GaussianRational) -> LPoly {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        LPoly { terms }
    }

    pub fn var_pow(v: QVar, n: i32) -> LPoly {
        let mut e = [0; NVARS];
        e[v.index()] = n;
        LPoly::monomial(e, GaussianRational::ONE)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exps, &GaussianRational)> {
        self.terms.iter()
    }

    fn add_term(&mut self, e: Exps, c: GaussianRational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e).or_insert(GaussianRational::ZERO);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn add(&self, o: &LPoly) -> LPoly {
        let mut out = self.clone();
        for (e, c) in &o.terms {
            out.add_term(*e, *c);
        }
        out
    }

    pub fn sub(&self, o: &LPoly) -> LPoly {
        self.add(&o.scale(-GaussianRational::ONE))
    }

    pub fn scale(&self, c: GaussianRational) -> LPoly {
        if c.is_zero() {
            return LPoly::zero();
        }
        LPoly {
            terms: self.terms.iter().map(|(e, v)| (*e, *v * c)).collect(),
        }
    }

    pub fn mul(&self, o: &LPoly) -> LPoly {
        let mut out = LPoly::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                let mut e = *e1;
                for i in 0..NVARS {
                    e[i] += e2[i];
                }
                out.add_term(e, *c1 * *c2);
            }
        }
        out
    }

    pub fn pow(&self, n: u32) -> LPoly {
        (0..n).fold(LPoly::one(), |acc, _| acc.mul(self))
    }

    /// The constant, if the polynomial is one.
    pub fn as_constant(&self) -> Option<GaussianRational> {
        match self.terms.len() {
            0 => Some(GaussianRational::ZERO),
            1 => self.terms.get(&[0; NVARS]).copied(),
            _ => None,
        }
    }

    /// `(exponents, coefficient)` if the polynomial is a single term.
    pub fn as_monomial(&self) -> Option<(Exps, GaussianRational)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(e, c)| (*e, *c))
        } else {
            None
        }
    }

    /// Substitutes `v ↦ image[v]` for every symbol, where each image is a
    /// Laurent monomial, and maps coefficients through `coeff`.
    pub fn substitute(
        &self,
        image: &[(Exps, GaussianRational); NVARS],
        coeff: &dyn Fn(GaussianRational) -> GaussianRational,
    ) -> LPoly {
        let mut out = LPoly::zero();
        for (e, c) in &self.terms {
            let mut ne = [0; NVARS];
            let mut nc = coeff(*c);
            for (i, &k) in e.iter().enumerate() {
                let (ie, ic) = &image[i];
                for j in 0..NVARS {
                    ne[j] += ie[j] * k;
                }
                nc = nc * pow_signed(*ic, k);
            }
            out.add_term(ne, nc);
        }
        out
    }

    /// Exact quotient by the univariate integer polynomial `p` (ascending
    /// coefficients, monic) in `v`, if it divides.
    fn div_univariate(&self, v: QVar, p: &[i64]) -> Option<LPoly> {
        let vi = v.index();
        let deg = p.len() - 1;
        // group by exponent of v
        let mut rows: BTreeMap<i32, LPoly> = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut rest = *e;
            let k = rest[vi];
            rest[vi] = 0;
            rows.entry(k).or_default().add_term(rest, *c);
        }
        let lo = match rows.keys().next() {
            Some(&k) => k,
            None => return Some(LPoly::zero()),
        };
        let mut quotient: BTreeMap<i32, LPoly> = BTreeMap::new();
        while let Some((&top, _)) = rows.iter().next_back() {
            if top - lo < deg as i32 {
                return None;
            }
            let lead = rows.remove(&top).unwrap();
            let shift = top - deg as i32;
            for (i, &pc) in p.iter().enumerate().take(deg) {
                if pc != 0 {
                    let k = shift + i as i32;
                    let row = rows.entry(k).or_default();
                    *row = row.sub(&lead.scale(GaussianRational::from_int(pc)));
                    if row.is_zero() {
                        rows.remove(&k);
                    }
                }
            }
            quotient.insert(shift, lead);
        }
        let mut out = LPoly::zero();
        for (k, row) in quotient {
            for (e, c) in row.terms {
                let mut e = e;
                e[vi] = k;
                out.add_term(e, c);
            }
        }
        Some(out)
    }

    /// Drops terms whose exponent of `v` exceeds `max`.
    pub fn truncate_var(&self, v: QVar, max: i32) -> LPoly {
        LPoly {
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e[v.index()] <= max)
                .map(|(e, c)| (*e, *c))
                .collect(),
        }
    }

    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(e, c)| {
                let m = render_exps(e);
                match (m.is_empty(), c.is_one()) {
                    (true, _) => format!("{c}"),
                    (false, true) => m,
                    (false, false) => format!("({c})*{m}"),
                }
            })
            .collect();
        parts.join(" + ")
    }
}

fn pow_signed(c: GaussianRational, k: i32) -> GaussianRational {
    if k >= 0 {
        c.pow(k as u32)
    } else {
        c.recip().pow((-k) as u32)
    }
}

fn render_exps(e: &Exps) -> String {
    let mut parts = Vec::new();
    for v in QVar::ALL {
        match e[v.index()] {
            0 => {}
            1 => parts.push(v.symbol().to_owned()),
            k => parts.push(format!("{}^{k}", v.symbol())),
        }
    }
    parts.join("*")
}

/// Coefficients of the `n`-th cyclotomic polynomial, ascending.
pub fn cyclotomic(n: u32) -> Vec<i64> {
    assert!(n >= 1);
    // x^n − 1 divided by Φ_d for every proper divisor d
    let mut p = vec![0i64; n as usize + 1];
    p[0] = -1;
    p[n as usize] = 1;
    for d in 1..n {
        if n.is_multiple_of(d) {
            p = poly_div_exact(&p, &cyclotomic(d));
        }
    }
    p
}

fn poly_div_exact(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut rem = a.to_vec();
    let db = b.len() - 1;
    let mut q = vec![0i64; a.len() - db];
    for i in (0..q.len()).rev() {
        let c = rem[i + db] / b[db];
        q[i] = c;
        for (j, &bc) in b.iter().enumerate() {
            rem[i + j] -= c * bc;
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    q
}

fn euler_phi(n: u32) -> u32 {
    (1..=n).filter(|&k| gcd(k, n) == 1).count() as u32
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// `Φ_n(v)` as a Laurent polynomial.
fn cyclotomic_poly(v: QVar, n: u32) -> LPoly {
    let mut out = LPoly::zero();
    for (i, &c) in cyclotomic(n).iter().enumerate() {
        if c != 0 {
            out = out.add(&LPoly::var_pow(v, i as i32).scale(GaussianRational::from_int(c)));
        }
    }
    out
}

/// Element of the fraction field: `num / Π Φ_d(v)^{mult}`.
///
/// Kept reduced (no denominator factor divides the numerator), which makes
/// the representation unique.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct QScalar {
    num: LPoly,
    den: BTreeMap<(QVar, u32), u32>,
}

impl QScalar {
    pub fn zero() -> QScalar {
        QScalar::default()
    }

    pub fn one() -> QScalar {
        QScalar::from_poly(LPoly::one())
    }

    pub fn from_poly(num: LPoly) -> QScalar {
        QScalar {
            num,
            den: BTreeMap::new(),
        }
    }

    pub fn constant(c: GaussianRational) -> QScalar {
        QScalar::from_poly(LPoly::constant(c))
    }

    pub fn int(n: i64) -> QScalar {
        QScalar::constant(GaussianRational::from_int(n))
    }

    /// `v^n`.
    pub fn var_pow(v: QVar, n: i32) -> QScalar {
        QScalar::from_poly(LPoly::var_pow(v, n))
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn numerator(&self) -> &LPoly {
        &self.num
    }

    /// The numerator, when there is no denominator.
    pub fn as_polynomial(&self) -> Option<&LPoly> {
        self.den.is_empty().then_some(&self.num)
    }

    /// Drops numerator terms whose exponent of `v` exceeds `max`; only
    /// meaningful for a `v` absent from the denominator, such as `λ`.
    pub fn truncate_var(&self, v: QVar, max: i32) -> QScalar {
        QScalar {
            num: self.num.truncate_var(v, max),
            den: self.den.clone(),
        }
        .reduce()
    }

    /// `1/Φ_n(v)`.
    pub fn inv_cyclotomic(v: QVar, n: u32) -> QScalar {
        let mut den = BTreeMap::new();
        den.insert((v, n), 1);
        QScalar {
            num: LPoly::one(),
            den,
        }
    }

    /// `1/(q − q⁻¹) = q/(Φ₁(q)Φ₂(q))` for a base `q`.
    pub fn inv_q_difference(v: QVar) -> QScalar {
        QScalar::var_pow(v, 1)
            .mul(&QScalar::inv_cyclotomic(v, 1))
            .mul(&QScalar::inv_cyclotomic(v, 2))
    }

    fn reduce(mut self) -> QScalar {
        if self.num.is_zero() {
            self.den.clear();
            return self;
        }
        let keys: Vec<(QVar, u32)> = self.den.keys().copied().collect();
        for (v, n) in keys {
            let p = cyclotomic(n);
            while self.den.get(&(v, n)).copied().unwrap_or(0) > 0 {
                match self.num.div_univariate(v, &p) {
                    Some(q) => {
                        self.num = q;
                        let m = self.den.get_mut(&(v, n)).unwrap();
                        *m -= 1;
                        if *m == 0 {
                            self.den.remove(&(v, n));
                        }
                    }
                    None => break,
                }
            }
        }
        self
    }

    /// Numerator multiplied by every factor of `den` missing from `self`.
    fn lift_to(&self, den: &BTreeMap<(QVar, u32), u32>) -> LPoly {
        let mut num = self.num.clone();
        for (&(v, n), &m) in den {
            let have = self.den.get(&(v, n)).copied().unwrap_or(0);
            for _ in have..m {
                num = num.mul(&cyclotomic_poly(v, n));
            }
        }
        num
    }

    pub fn add(&self, o: &QScalar) -> QScalar {
        if o.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return o.clone();
        }
        let mut den = self.den.clone();
        for (k, &m) in &o.den {
            let e = den.entry(*k).or_insert(0);
            *e = (*e).max(m);
        }
        let num = self.lift_to(&den).add(&o.lift_to(&den));
        QScalar { num, den }.reduce()
    }

    pub fn neg(&self) -> QScalar {
        QScalar {
            num: self.num.scale(-GaussianRational::ONE),
            den: self.den.clone(),
        }
    }

    pub fn sub(&self, o: &QScalar) -> QScalar {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &QScalar) -> QScalar {
        if self.is_zero() || o.is_zero() {
            return QScalar::zero();
        }
        let mut den = self.den.clone();
        for (k, &m) in &o.den {
            *den.entry(*k).or_insert(0) += m;
        }
        QScalar {
            num: self.num.mul(&o.num),
            den,
        }
        .reduce()
    }

    pub fn scale(&self, c: GaussianRational) -> QScalar {
        QScalar {
            num: self.num.scale(c),
            den: if c.is_zero() {
                BTreeMap::new()
            } else {
                self.den.clone()
            },
        }
    }

    /// Substitution of every symbol by a Laurent monomial `c·v'^{±1}`-style
    /// image (see [`LPoly::substitute`]). Denominator factors `Φ_n(v)` must
    /// map to `Φ_n(w^{±1})` for a single base `w`.
    pub fn substitute(
        &self,
        image: &[(Exps, GaussianRational); NVARS],
        coeff: &dyn Fn(GaussianRational) -> GaussianRational,
    ) -> QScalar {
        let mut out = QScalar::from_poly(self.num.substitute(image, coeff));
        for (&(v, n), &m) in &self.den {
            let (e, c) = image[v.index()];
            assert!(
                c.is_one(),
                "denominator substitution must be a pure base power"
            );
            let nz: Vec<usize> = (0..NVARS).filter(|&i| e[i] != 0).collect();
            assert!(
                nz.len() == 1 && e[nz[0]].abs() == 1,
                "denominator substitution must be w^±1"
            );
            let w = QVar::ALL[nz[0]];
            // Φ_n(w⁻¹) = s·w^{−φ(n)}·Φ_n(w), s = −1 for n = 1
            let mut factor = QScalar::inv_cyclotomic(w, n);
            if e[nz[0]] == -1 {
                let s = if n == 1 { -1 } else { 1 };
                factor = factor.mul(
                    &QScalar::var_pow(w, euler_phi(n) as i32).scale(GaussianRational::from_int(s)),
                );
            }
            for _ in 0..m {
                out = out.mul(&factor);
            }
        }
        out
    }

    pub fn render(&self) -> String {
        if self.den.is_empty() {
            return self.num.render();
        }
        let den: Vec<String> = self
            .den
            .iter()
            .map(|(&(v, n), &m)| {
                let f = format!("Phi{n}({})", v.symbol());
                if m == 1 {
                    f
                } else {
                    format!("{f}^{m}")
                }
            })
            .collect();
        format!("({}) / ({})", self.num.render(), den.join("*"))
    }
}

impl fmt::Display for QScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(cyclotomic(1), vec![-1, 1]);
        assert_eq!(cyclotomic(2), vec![1, 1]);
        assert_eq!(cyclotomic(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic(12), vec![1, 0, -1, 0, 1]);
    }

    #[test]
    fn fractions_reduce() {
        let q = QVar::ZPlus;
        // (q − q⁻¹) · 1/(q − q⁻¹) = 1
        let diff = QScalar::var_pow(q, 1).sub(&QScalar::var_pow(q, -1));
        assert_eq!(diff.mul(&QScalar::inv_q_difference(q)), QScalar::one());
        // (q² − q⁻²)/(q − q⁻¹) = q + q⁻¹
        let d2 = QScalar::var_pow(q, 2).sub(&QScalar::var_pow(q, -2));
        let sum = QScalar::var_pow(q, 1).add(&QScalar::var_pow(q, -1));
        assert_eq!(d2.mul(&QScalar::inv_q_difference(q)), sum);
        // a/b + c/b recombines over the common denominator
        let half = QScalar::inv_q_difference(q);
        assert_eq!(
            half.add(&half)
                .sub(&half.scale(GaussianRational::from_int(2))),
            QScalar::zero()
        );
    }

    #[test]
    fn substitution_through_inverse_base() {
        // 1/(q − q⁻¹) at q ↦ w⁻¹ is −1/(w − w⁻¹)
        let mut image = [([0; NVARS], GaussianRational::ONE); NVARS];
        for v in QVar::ALL {
            image[v.index()].0[v.index()] = 1;
        }
        image[QVar::ZMinus.index()].0 = [0, 0, 0, -1, 0];
        let s = QScalar::inv_q_difference(QVar::ZMinus).substitute(&image, &|c| c);
        assert_eq!(s, QScalar::inv_q_difference(QVar::Xi).neg());
    }
}

//! Expression trees over the abstract generators.
//!
//! An [`Expr`] is a finite tree of generator symbols, scalar functions of J0,
//! ordered products, sums, and scalar multiples. Expressions carry the
//! substitutions the structure maps need: the colour-flip involution acts
//! homomorphically, the antipode antihomomorphically (products reversed).
//! Evaluation substitutes the matrices of a concrete representation.
//!
//! Scalar functions of J0 come from a closed catalogue ([`ScalarFn`]): affine
//! maps, the family c0 + c1 G(z)^k (covering G, its powers and inverses, and
//! affine functions of J0 through G), q-powers of affine and of G-power
//! arguments, and log_q(s G(z)). Each family is closed under precomposition
//! with the involution z -> 2/(q-1) - z and with the antipode image
//! z -> (1 - c/G(z))/(q-1), which is what keeps every structure-map image of
//! an expression inside the catalogue.

use nalgebra::DMatrix;

use crate::error::{Error, Result};
use crate::qfunc::{self, Colour, QParams};
use crate::repr::GeneratorRep;

/// Numerically evaluable scalar function of a J0 eigenvalue.
#[derive(Debug, Clone, PartialEq)]
pub enum ScalarFn {
    /// z -> a + b z.
    Affine { a: f64, b: f64 },
    /// z -> c0 + c1 G(z)^k with G(z) = 1 + (1-q) z and integer k.
    AffineGPow { c0: f64, c1: f64, k: i32 },
    /// z -> q^(a + b z).
    QPowAffine { a: f64, b: f64 },
    /// z -> q^(a + b G(z)^k).
    QPowGAffine { a: f64, b: f64, k: i32 },
    /// z -> mult * log_q(s G(z)), s = +-1.
    LogQG { mult: f64, s: f64 },
}

impl ScalarFn {
    /// G(z)^k.
    pub fn g_pow(k: i32) -> Self {
        ScalarFn::AffineGPow {
            c0: 0.0,
            c1: 1.0,
            k,
        }
    }

    /// q^(b z), the root-algebra coproduct leg function.
    pub fn q_pow_j0(b: f64) -> Self {
        ScalarFn::QPowAffine { a: 0.0, b }
    }

    /// log_q(s G(z)), the coloured R-matrix exponent.
    pub fn log_q_g(s: f64) -> Self {
        ScalarFn::LogQG { mult: 1.0, s }
    }

    /// Evaluate at a J0 eigenvalue.
    pub fn eval(&self, z: f64, p: &QParams) -> Result<f64> {
        let g_checked = |need: bool| -> Result<f64> {
            let g = qfunc::g_fn(z, p);
            if need && qfunc::is_singular(z, p) {
                Err(Error::SingularPoint { z })
            } else {
                Ok(g)
            }
        };
        match *self {
            ScalarFn::Affine { a, b } => Ok(a + b * z),
            ScalarFn::AffineGPow { c0, c1, k } => {
                let g = g_checked(k < 0)?;
                Ok(c0 + c1 * g.powi(k))
            }
            ScalarFn::QPowAffine { a, b } => Ok(p.q().powf(a + b * z)),
            ScalarFn::QPowGAffine { a, b, k } => {
                let g = g_checked(k < 0)?;
                Ok(p.q().powf(a + b * g.powi(k)))
            }
            ScalarFn::LogQG { mult, s } => {
                let g = g_checked(true)?;
                let arg = s * g;
                if arg <= 0.0 {
                    return Err(Error::LogDomain { value: arg });
                }
                Ok(mult * arg.ln() / p.q().ln())
            }
        }
    }

    /// Precompose with the involution z -> 2/(q-1) - z, under which
    /// G -> -G.
    pub fn compose_sigma(&self, p: &QParams) -> ScalarFn {
        let s0 = 2.0 / (p.q() - 1.0);
        match *self {
            ScalarFn::Affine { a, b } => ScalarFn::Affine {
                a: a + b * s0,
                b: -b,
            },
            ScalarFn::AffineGPow { c0, c1, k } => ScalarFn::AffineGPow {
                c0,
                c1: c1 * neg_one_pow(k),
                k,
            },
            ScalarFn::QPowAffine { a, b } => ScalarFn::QPowAffine {
                a: a + b * s0,
                b: -b,
            },
            ScalarFn::QPowGAffine { a, b, k } => ScalarFn::QPowGAffine {
                a,
                b: b * neg_one_pow(k),
                k,
            },
            ScalarFn::LogQG { mult, s } => ScalarFn::LogQG { mult, s: -s },
        }
    }

    /// Precompose with the antipode image of J0 for colour product c = +-1,
    /// z -> (1 - c/G(z))/(q-1), under which G -> c G^-1.
    pub fn compose_antipode(&self, c: f64, p: &QParams) -> ScalarFn {
        let q1 = p.q() - 1.0;
        match *self {
            // a + b s_c(z) = (a + b/(q-1)) - (b c/(q-1)) G^-1
            ScalarFn::Affine { a, b } => ScalarFn::AffineGPow {
                c0: a + b / q1,
                c1: -b * c / q1,
                k: -1,
            },
            ScalarFn::AffineGPow { c0, c1, k } => ScalarFn::AffineGPow {
                c0,
                c1: c1 * c.powi(k),
                k: -k,
            },
            ScalarFn::QPowAffine { a, b } => ScalarFn::QPowGAffine {
                a: a + b / q1,
                b: -b * c / q1,
                k: -1,
            },
            ScalarFn::QPowGAffine { a, b, k } => ScalarFn::QPowGAffine {
                a,
                b: b * c.powi(k),
                k: -k,
            },
            // log_q(s c G^-1) = -log_q(s c G) for s c = +-1
            ScalarFn::LogQG { mult, s } => ScalarFn::LogQG {
                mult: -mult,
                s: s * c,
            },
        }
    }

    /// Precompose with z -> -z (the root-algebra antipode image of j0).
    /// Only the G-free families admit this map.
    pub fn compose_negate(&self) -> Result<ScalarFn> {
        match *self {
            ScalarFn::Affine { a, b } => Ok(ScalarFn::Affine { a, b: -b }),
            ScalarFn::QPowAffine { a, b } => Ok(ScalarFn::QPowAffine { a, b: -b }),
            _ => Err(Error::MalformedExpr(
                "negation composed with a structure-function family",
            )),
        }
    }
}

fn neg_one_pow(k: i32) -> f64 {
    if k % 2 == 0 {
        1.0
    } else {
        -1.0
    }
}

/// Finite expression tree over abstract generators.
#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    /// The diagonal generator.
    J0,
    /// Raising generator.
    Jp,
    /// Lowering generator.
    Jm,
    /// Unit of the algebra.
    Unit,
    /// Scalar function applied to J0.
    FnJ0(ScalarFn),
    /// Scalar multiple.
    Scale(f64, Box<Expr>),
    /// Ordered (noncommutative) product.
    Prod(Vec<Expr>),
    /// Sum.
    Sum(Vec<Expr>),
}

impl Expr {
    pub fn scale(c: f64, e: Expr) -> Expr {
        Expr::Scale(c, Box::new(e))
    }
}

/// Substitute the representation matrices into an expression: J0 becomes the
/// diagonal eigenvalue matrix, scalar functions act entrywise on it, products
/// multiply in order.
pub fn eval_expr(e: &Expr, rep: &GeneratorRep, p: &QParams) -> Result<DMatrix<f64>> {
    match e {
        Expr::J0 => Ok(rep.j0_matrix()),
        Expr::Jp => Ok(rep.jplus.clone()),
        Expr::Jm => Ok(rep.jminus.clone()),
        Expr::Unit => Ok(DMatrix::identity(rep.dim, rep.dim)),
        Expr::FnJ0(f) => rep.apply_to_j0(|z| f.eval(z, p)),
        Expr::Scale(c, inner) => Ok(*c * eval_expr(inner, rep, p)?),
        Expr::Prod(children) => {
            if children.is_empty() {
                return Err(Error::MalformedExpr("empty product"));
            }
            let mut acc = eval_expr(&children[0], rep, p)?;
            for child in &children[1..] {
                acc *= eval_expr(child, rep, p)?;
            }
            Ok(acc)
        }
        Expr::Sum(children) => {
            if children.is_empty() {
                return Err(Error::MalformedExpr("empty sum"));
            }
            let mut acc = eval_expr(&children[0], rep, p)?;
            for child in &children[1..] {
                acc += eval_expr(child, rep, p)?;
            }
            Ok(acc)
        }
    }
}

/// Homomorphic substitution of the colour-flip involution:
/// J0 -> 2/(q-1) - J0, ladder generators fixed, scalar functions
/// precomposed.
pub fn apply_sigma(e: &Expr, p: &QParams) -> Expr {
    match e {
        Expr::J0 => Expr::FnJ0(ScalarFn::Affine {
            a: 2.0 / (p.q() - 1.0),
            b: -1.0,
        }),
        Expr::Jp | Expr::Jm | Expr::Unit => e.clone(),
        Expr::FnJ0(f) => Expr::FnJ0(f.compose_sigma(p)),
        Expr::Scale(c, inner) => Expr::scale(*c, apply_sigma(inner, p)),
        Expr::Prod(children) => Expr::Prod(children.iter().map(|c| apply_sigma(c, p)).collect()),
        Expr::Sum(children) => Expr::Sum(children.iter().map(|c| apply_sigma(c, p)).collect()),
    }
}

/// The indexed substitution: identity for Plus, the involution for Minus.
pub fn apply_sigma_delta(e: &Expr, s: Colour, p: &QParams) -> Expr {
    match s {
        Colour::Plus => e.clone(),
        Colour::Minus => apply_sigma(e, p),
    }
}

/// Antihomomorphic antipode substitution with colours (zeta, delta):
/// J+ -> -q J+, J- -> -q^-1 J-, J0 -> (1 - zeta delta G(J0)^-1)/(q-1),
/// products reversed, scalar functions precomposed with the J0 image.
pub fn apply_antipode(e: &Expr, zeta: Colour, delta: Colour, p: &QParams) -> Result<Expr> {
    let c = (zeta * delta).sign();
    let q1 = p.q() - 1.0;
    Ok(match e {
        Expr::J0 => Expr::FnJ0(ScalarFn::AffineGPow {
            c0: 1.0 / q1,
            c1: -c / q1,
            k: -1,
        }),
        Expr::Jp => Expr::scale(-p.q(), Expr::Jp),
        Expr::Jm => Expr::scale(-1.0 / p.q(), Expr::Jm),
        Expr::Unit => Expr::Unit,
        Expr::FnJ0(f) => Expr::FnJ0(f.compose_antipode(c, p)),
        Expr::Scale(c0, inner) => Expr::scale(*c0, apply_antipode(inner, zeta, delta, p)?),
        Expr::Prod(children) => {
            let mut rev = Vec::with_capacity(children.len());
            for child in children.iter().rev() {
                rev.push(apply_antipode(child, zeta, delta, p)?);
            }
            Expr::Prod(rev)
        }
        Expr::Sum(children) => Expr::Sum(
            children
                .iter()
                .map(|c| apply_antipode(c, zeta, delta, p))
                .collect::<Result<Vec<_>>>()?,
        ),
    })
}

/// Root-algebra antipode: j0 -> -j0, j+- -> -q^+-1 j+-, products reversed.
pub fn apply_antipode_su(e: &Expr, p: &QParams) -> Result<Expr> {
    Ok(match e {
        Expr::J0 => Expr::scale(-1.0, Expr::J0),
        Expr::Jp => Expr::scale(-p.q(), Expr::Jp),
        Expr::Jm => Expr::scale(-1.0 / p.q(), Expr::Jm),
        Expr::Unit => Expr::Unit,
        Expr::FnJ0(f) => Expr::FnJ0(f.compose_negate()?),
        Expr::Scale(c0, inner) => Expr::scale(*c0, apply_antipode_su(inner, p)?),
        Expr::Prod(children) => {
            let mut rev = Vec::with_capacity(children.len());
            for child in children.iter().rev() {
                rev.push(apply_antipode_su(child, p)?);
            }
            Expr::Prod(rev)
        }
        Expr::Sum(children) => Expr::Sum(
            children
                .iter()
                .map(|c| apply_antipode_su(c, p))
                .collect::<Result<Vec<_>>>()?,
        ),
    })
}

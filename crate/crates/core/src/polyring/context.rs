use std::fmt;

use crate::error::{Error, Result};

/// Hard limit imposed by the packed monomial encoding.
pub const MAX_VARS: usize = 16;

/// A single variable of a [`VarContext`]. Indices are 1-based, as in `a₁`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Var {
    /// Branch point `a_i`.
    A(usize),
    /// Right-block variable `α_j`.
    Alpha(usize),
    T,
    X,
    Y,
}

/// The ordered variable set of a polynomial:
/// `a₁ < … < a_r < α₁ < … < α_{r₂} < t < x < y`, with the auxiliary
/// variables present only when enabled.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct VarContext {
    pub r: usize,
    pub right: usize,
    pub t: bool,
    pub x: bool,
    pub y: bool,
}

impl VarContext {
    /// Context with branch points `a₁..a_r` only.
    pub fn branch(r: usize) -> Self {
        VarContext {
            r,
            right: 0,
            t: false,
            x: false,
            y: false,
        }
    }

    /// Two-block context `a₁..a_{r₁}, α₁..α_{r₂}` used for Witt images.
    pub fn blocks(r1: usize, r2: usize) -> Self {
        VarContext {
            r: r1,
            right: r2,
            t: false,
            x: false,
            y: false,
        }
    }

    pub fn with_t(mut self) -> Self {
        self.t = true;
        self
    }

    pub fn with_xy(mut self) -> Self {
        self.x = true;
        self.y = true;
        self
    }

    pub fn nvars(&self) -> usize {
        self.r + self.right + self.t as usize + self.x as usize + self.y as usize
    }

    pub fn validate(&self) -> Result<()> {
        if self.nvars() > MAX_VARS {
            return Err(Error::PreconditionViolated(format!(
                "{} variables exceed the limit of {MAX_VARS}",
                self.nvars()
            )));
        }
        Ok(())
    }

    pub fn has_aux(&self) -> bool {
        self.right > 0 || self.t || self.x || self.y
    }

    /// Position of `v` in the variable order, if present.
    pub fn index(&self, v: Var) -> Option<usize> {
        let mut base = self.r + self.right;
        match v {
            Var::A(i) if (1..=self.r).contains(&i) => Some(i - 1),
            Var::Alpha(j) if (1..=self.right).contains(&j) => Some(self.r + j - 1),
            Var::T if self.t => Some(base),
            Var::X if self.x => {
                base += self.t as usize;
                Some(base)
            }
            Var::Y if self.y => {
                base += self.t as usize + self.x as usize;
                Some(base)
            }
            _ => None,
        }
    }

    pub fn require(&self, v: Var) -> Result<usize> {
        self.index(v).ok_or_else(|| {
            Error::PreconditionViolated(format!("variable {v:?} not in context {self}"))
        })
    }

    /// Variable at position `idx`.
    pub fn var_at(&self, idx: usize) -> Var {
        if idx < self.r {
            return Var::A(idx + 1);
        }
        if idx < self.r + self.right {
            return Var::Alpha(idx - self.r + 1);
        }
        let mut k = idx - self.r - self.right;
        for (on, v) in [(self.t, Var::T), (self.x, Var::X), (self.y, Var::Y)] {
            if on {
                if k == 0 {
                    return v;
                }
                k -= 1;
            }
        }
        panic!("variable index {idx} out of range for {self}");
    }

    /// The context obtained by deleting `v`; later branch or right-block
    /// variables shift down by one.
    pub fn without(&self, v: Var) -> VarContext {
        let mut c = *self;
        match v {
            Var::A(_) => c.r -= 1,
            Var::Alpha(_) => c.right -= 1,
            Var::T => c.t = false,
            Var::X => c.x = false,
            Var::Y => c.y = false,
        }
        c
    }

    /// The comma separated auxiliary list of the text header.
    pub fn aux_list(&self) -> String {
        let mut parts = Vec::new();
        if self.right > 0 {
            parts.push(format!("alpha{}", self.right));
        }
        if self.t {
            parts.push("t".to_string());
        }
        if self.x {
            parts.push("x".to_string());
        }
        if self.y {
            parts.push("y".to_string());
        }
        parts.join(",")
    }

    pub fn parse_aux(r: usize, aux: &str) -> Result<Self> {
        let mut c = VarContext::branch(r);
        let mut stage = 0;
        for tok in aux.split(',').filter(|s| !s.is_empty()) {
            let rank = if let Some(n) = tok.strip_prefix("alpha") {
                let n: usize = n
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad right block `{tok}`")))?;
                if n == 0 {
                    return Err(Error::Parse("empty right block".into()));
                }
                c.right = n;
                1
            } else {
                match tok {
                    "t" => c.t = true,
                    "x" => c.x = true,
                    "y" => c.y = true,
                    _ => return Err(Error::Parse(format!("unknown auxiliary variable `{tok}`"))),
                }
                match tok {
                    "t" => 2,
                    "x" => 3,
                    _ => 4,
                }
            };
            if rank <= stage {
                return Err(Error::Parse(format!("auxiliary list `{aux}` out of order")));
            }
            stage = rank;
        }
        c.validate().map_err(|e| Error::Parse(e.to_string()))?;
        Ok(c)
    }
}

impl fmt::Display for VarContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "r={} aux={}", self.r, self.aux_list())
    }
}

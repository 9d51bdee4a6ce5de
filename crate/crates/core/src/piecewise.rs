/// One affine piece `intercept + slope * q` on `[lo, hi]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Piece {
    pub lo: f64,
    pub hi: f64,
    pub slope: f64,
    pub intercept: f64,
}

impl Piece {
    pub fn constant(lo: f64, hi: f64, value: f64) -> Self {
        Self { lo, hi, slope: 0.0, intercept: value }
    }

    pub fn eval(&self, q: f64) -> f64 {
        self.intercept + self.slope * q
    }
}

/// Which side owns a breakpoint shared by two adjacent pieces.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Owner {
    Left,
    Right,
}

/// A function on `[0, 1]` made of at most a handful of affine pieces, with
/// an explicit convention for the value at jump points.
#[derive(Debug, Clone, PartialEq)]
pub struct PiecewiseAffine {
    pieces: Vec<Piece>,
    owner: Owner,
}

impl PiecewiseAffine {
    /// `pieces` must be sorted and contiguous.
    pub fn new(pieces: Vec<Piece>, owner: Owner) -> Self {
        debug_assert!(!pieces.is_empty());
        debug_assert!(pieces.windows(2).all(|w| w[0].hi == w[1].lo));
        Self { pieces, owner }
    }

    pub fn constant(value: f64) -> Self {
        Self::new(vec![Piece::constant(0.0, 1.0, value)], Owner::Right)
    }

    pub fn pieces(&self) -> &[Piece] {
        &self.pieces
    }

    /// Interior breakpoints.
    pub fn breakpoints(&self) -> impl Iterator<Item = f64> + '_ {
        self.pieces[..self.pieces.len() - 1].iter().map(|p| p.hi)
    }

    /// Evaluates at `q`. A `q` within [`crate::model::EPS`] of a breakpoint is
    /// treated as lying on it.
    pub fn eval(&self, q: f64) -> f64 {
        self.piece_at(q).eval(q)
    }

    fn piece_at(&self, q: f64) -> &Piece {
        let eps = crate::model::EPS;
        let last = self.pieces.len() - 1;
        for piece in &self.pieces[..last] {
            let inside = match self.owner {
                Owner::Right => q < piece.hi - eps,
                Owner::Left => q <= piece.hi + eps,
            };
            if inside {
                return piece;
            }
        }
        &self.pieces[last]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn breakpoint_ownership() {
        let pieces = vec![Piece::constant(0.0, 0.5, 1.0), Piece::constant(0.5, 1.0, 2.0)];
        let right = PiecewiseAffine::new(pieces.clone(), Owner::Right);
        let left = PiecewiseAffine::new(pieces, Owner::Left);
        assert_eq!(right.eval(0.5), 2.0);
        assert_eq!(left.eval(0.5), 1.0);
        assert_eq!(right.eval(0.25), 1.0);
        assert_eq!(left.eval(0.75), 2.0);
        assert_eq!(right.breakpoints().collect::<Vec<_>>(), vec![0.5]);
    }
}

use std::fmt;
use std::str::FromStr;

use crate::error::Error;

/// The convexity classes under test. Set labels take a [`LatticeSet`],
/// function labels a [`LatticeFn`].
///
/// [`LatticeSet`]: crate::LatticeSet
/// [`LatticeFn`]: crate::LatticeFn
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ClassLabel {
    IntegerBox,
    SeparableConvex,
    IntegrallyConvexSet,
    IntegrallyConvexFn,
    LNatSet,
    LNatFn,
    LSet,
    LFn,
    MNatSet,
    MNatFn,
    MSet,
    MFn,
    MultimodularSet,
    MultimodularFn,
    GlobalDmcSet,
    GlobalDmcFn,
    LocalDmcFn,
    JumpSystem,
    ConstParityJump,
    SimultExchJump,
    JumpMFn,
    JumpMNatFn,
}

impl ClassLabel {
    pub const ALL: [ClassLabel; 22] = [
        ClassLabel::IntegerBox,
        ClassLabel::SeparableConvex,
        ClassLabel::IntegrallyConvexSet,
        ClassLabel::IntegrallyConvexFn,
        ClassLabel::LNatSet,
        ClassLabel::LNatFn,
        ClassLabel::LSet,
        ClassLabel::LFn,
        ClassLabel::MNatSet,
        ClassLabel::MNatFn,
        ClassLabel::MSet,
        ClassLabel::MFn,
        ClassLabel::MultimodularSet,
        ClassLabel::MultimodularFn,
        ClassLabel::GlobalDmcSet,
        ClassLabel::GlobalDmcFn,
        ClassLabel::LocalDmcFn,
        ClassLabel::JumpSystem,
        ClassLabel::ConstParityJump,
        ClassLabel::SimultExchJump,
        ClassLabel::JumpMFn,
        ClassLabel::JumpMNatFn,
    ];

    pub fn is_set(self) -> bool {
        use ClassLabel::*;
        matches!(
            self,
            IntegerBox
                | IntegrallyConvexSet
                | LNatSet
                | LSet
                | MNatSet
                | MSet
                | MultimodularSet
                | GlobalDmcSet
                | JumpSystem
                | ConstParityJump
                | SimultExchJump
        )
    }

    /// Whether the class consists of objects invariant along `1`; these
    /// labels take lifted inputs and no others do.
    pub fn is_lifted(self) -> bool {
        matches!(self, ClassLabel::LSet | ClassLabel::LFn)
    }

    /// The kebab-case name used on the command line.
    pub fn name(self) -> &'static str {
        use ClassLabel::*;
        match self {
            IntegerBox => "integer-box",
            SeparableConvex => "separable-convex",
            IntegrallyConvexSet => "integrally-convex-set",
            IntegrallyConvexFn => "integrally-convex-fn",
            LNatSet => "lnat-set",
            LNatFn => "lnat-fn",
            LSet => "l-set",
            LFn => "l-fn",
            MNatSet => "mnat-set",
            MNatFn => "mnat-fn",
            MSet => "m-set",
            MFn => "m-fn",
            MultimodularSet => "multimodular-set",
            MultimodularFn => "multimodular-fn",
            GlobalDmcSet => "global-dmc-set",
            GlobalDmcFn => "global-dmc-fn",
            LocalDmcFn => "local-dmc-fn",
            JumpSystem => "jump-system",
            ConstParityJump => "const-parity-jump",
            SimultExchJump => "simult-exch-jump",
            JumpMFn => "jump-m-fn",
            JumpMNatFn => "jump-mnat-fn",
        }
    }

    /// Row title used in rendered tables.
    pub fn title(self) -> &'static str {
        use ClassLabel::*;
        match self {
            IntegerBox => "Integer box",
            SeparableConvex => "Separable convex",
            IntegrallyConvexSet | IntegrallyConvexFn => "Integrally convex",
            LNatSet | LNatFn => "L♮-convex",
            LSet | LFn => "L-convex",
            MNatSet | MNatFn => "M♮-convex",
            MSet | MFn => "M-convex",
            MultimodularSet | MultimodularFn => "Multimodular",
            GlobalDmcSet => "Disc. midpt convex",
            GlobalDmcFn => "Globally d.m.c.",
            LocalDmcFn => "Locally d.m.c.",
            JumpSystem => "Jump system",
            ConstParityJump => "Const-parity jump",
            SimultExchJump => "Simul. exch. jump",
            JumpMFn => "Jump M-convex",
            JumpMNatFn => "Jump M♮-convex",
        }
    }
}

impl fmt::Display for ClassLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ClassLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        ClassLabel::ALL
            .into_iter()
            .find(|l| l.name() == s)
            .ok_or_else(|| Error::InvalidSpec(format!("unknown class label `{s}`")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for l in ClassLabel::ALL {
            assert_eq!(l.name().parse::<ClassLabel>().unwrap(), l);
        }
        assert!("m-convex".parse::<ClassLabel>().is_err());
    }

    #[test]
    fn eleven_set_labels() {
        assert_eq!(ClassLabel::ALL.iter().filter(|l| l.is_set()).count(), 11);
    }
}

//! Parity tables coming from Bott periodicity: `KSp^{-2}` of spheres and the
//! factor by which complexification `c': KSp^{-2}(S^{4j+2}) → K^{-2}(S^{4j+2})`
//! multiplies a generator.

use core::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SphereKSpGroup {
    Integers,
    TwoTorsion,
    Trivial,
}

impl fmt::Display for SphereKSpGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SphereKSpGroup::Integers => "Z",
            SphereKSpGroup::TwoTorsion => "Z/2",
            SphereKSpGroup::Trivial => "0",
        })
    }
}

/// `KSp^{-2}(S^q)` for `q ≥ 1`, as tabulated for the torsion argument:
///
/// | q      | group                      |
/// |--------|----------------------------|
/// | 4r + 2 | Z                          |
/// | 4r + 1 | 0                          |
/// | 4r     | Z/2 if r even, 0 if r odd  |
/// | 4r - 1 | 0 if r even, Z/2 if r odd  |
///
/// Note: the `4r` row is the transcription used by the downstream torsion
/// argument; `π_{4r+1}(Sp)` has its two cases the other way round. Only the
/// torsion-vs-free split matters to the order computation.
pub fn ksp_minus2_of_sphere(q: u32) -> SphereKSpGroup {
    match q % 4 {
        2 => SphereKSpGroup::Integers,
        1 => SphereKSpGroup::Trivial,
        0 if (q / 4).is_multiple_of(2) => SphereKSpGroup::TwoTorsion,
        0 => SphereKSpGroup::Trivial,
        // q = 4r - 1
        _ if ((q + 1) / 4).is_multiple_of(2) => SphereKSpGroup::Trivial,
        _ => SphereKSpGroup::TwoTorsion,
    }
}

/// Complexification factor for the generator living over `S^{4j+2}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ScalingFactor {
    j: u32,
    sigma: u32,
}

impl ScalingFactor {
    pub fn j(&self) -> u32 {
        self.j
    }

    /// 1 or 2.
    pub fn sigma(&self) -> u32 {
        self.sigma
    }
}

pub fn complexification_sigma(j: u32) -> ScalingFactor {
    ScalingFactor {
        j,
        sigma: if j.is_multiple_of(2) { 1 } else { 2 },
    }
}

/// Source of σ values for the ψ computation.
///
/// [`BottSigma`] is the real table. Other implementations exist so that
/// tests can corrupt entries and watch the verdict flip.
pub trait SigmaTable {
    fn sigma(&self, j: u32) -> u32;
}

#[derive(Clone, Copy, Debug, Default)]
pub struct BottSigma;

impl SigmaTable for BottSigma {
    fn sigma(&self, j: u32) -> u32 {
        complexification_sigma(j).sigma()
    }
}

impl<F: Fn(u32) -> u32> SigmaTable for F {
    fn sigma(&self, j: u32) -> u32 {
        self(j)
    }
}

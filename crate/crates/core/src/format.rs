//! Versioned JSON files for representations, certificates and decompositions.
//!
//! Centers are stored as chart coordinates `[re, im]`. Floats are written in
//! the shortest form that parses back to the same `f64`, so every file the
//! crate emits round-trips bit for bit.

use std::fs;
use std::io::Write;
use std::path::Path;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::bending::BendingMove;
use crate::disc::ProjPoint;
use crate::error::{Error, Result};
use crate::isometry::Sign;
use crate::reduction::{Decomposition, Detector, ReductionCertificate};
use crate::representation::Representation;

pub const FORMAT_VERSION: &str = "1";

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RepresentationFile {
    pub version: String,
    pub epsilon: i8,
    pub centers: Vec<[f64; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub provenance: Option<String>,
}

impl RepresentationFile {
    pub fn from_representation(rho: &Representation, provenance: Option<String>) -> Self {
        Self {
            version: FORMAT_VERSION.to_string(),
            epsilon: rho.epsilon().as_i8(),
            centers: rho.chart_centers().iter().map(|z| [z.re, z.im]).collect(),
            provenance,
        }
    }

    fn parts(&self) -> Result<(Vec<ProjPoint>, Sign)> {
        if self.version != FORMAT_VERSION {
            return Err(Error::Format(format!(
                "unsupported format version `{}`",
                self.version
            )));
        }
        let epsilon = Sign::from_i8(self.epsilon).ok_or_else(|| {
            Error::Format(format!("epsilon must be 1 or -1, got {}", self.epsilon))
        })?;
        let centers = self
            .centers
            .iter()
            .map(|&[re, im]| {
                let z = Complex64::new(re, im);
                if !z.is_finite() {
                    return Err(Error::NonFinite);
                }
                if z.norm() >= 1.0 {
                    return Err(Error::NotInDisc);
                }
                ProjPoint::try_from_chart(z)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok((centers, epsilon))
    }

    /// Loads a validated length-2 or length `>= 5` representation.
    pub fn to_representation(&self) -> Result<Representation> {
        let (centers, epsilon) = self.parts()?;
        Representation::from_centers(centers, epsilon)
    }

    /// Like [`to_representation`](Self::to_representation) but also accepts
    /// the length-4 relations that appear inside reductions.
    pub fn to_relation(&self) -> Result<Representation> {
        let (centers, epsilon) = self.parts()?;
        Representation::relation(centers, epsilon)
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn read(path: &Path) -> Result<Self> {
        Self::from_json(&fs::read_to_string(path)?)
    }

    pub fn write(&self, path: &Path) -> Result<()> {
        write_atomic(path, &self.to_json()?)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CertificateFile {
    pub version: String,
    pub input: RepresentationFile,
    pub detector: Detector,
    pub moves: Vec<BendingMove>,
    pub cancel_index: usize,
    pub gaps: Vec<usize>,
    pub reduced: RepresentationFile,
}

impl CertificateFile {
    pub fn new(input: &Representation, cert: &ReductionCertificate) -> Self {
        Self {
            version: FORMAT_VERSION.to_string(),
            input: RepresentationFile::from_representation(input, None),
            detector: cert.detector,
            moves: cert.moves.clone(),
            cancel_index: cert.cancel_index,
            gaps: cert.gaps.clone(),
            reduced: RepresentationFile::from_representation(&cert.reduced, None),
        }
    }

    pub fn to_certificate(&self) -> Result<(Representation, ReductionCertificate)> {
        if self.version != FORMAT_VERSION {
            return Err(Error::Format(format!(
                "unsupported format version `{}`",
                self.version
            )));
        }
        let input = self.input.to_relation()?;
        let cert = ReductionCertificate {
            moves: self.moves.clone(),
            cancel_index: self.cancel_index,
            reduced: self.reduced.to_relation()?,
            detector: self.detector,
            gaps: self.gaps.clone(),
        };
        Ok((input, cert))
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    pub fn read(path: &Path) -> Result<Self> {
        Ok(serde_json::from_str(&fs::read_to_string(path)?)?)
    }

    pub fn write(&self, path: &Path) -> Result<()> {
        write_atomic(path, &self.to_json()?)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DecompositionFile {
    pub version: String,
    pub input: RepresentationFile,
    /// Centers of the extracted cancellations, in extraction order.
    pub cancellations: Vec<[f64; 2]>,
    pub core: Option<RepresentationFile>,
    pub steps: Vec<CertificateFile>,
    pub areas: Vec<f64>,
}

impl DecompositionFile {
    pub fn new(input: &Representation, d: &Decomposition) -> Self {
        let mut stage = input.clone();
        let mut steps = Vec::with_capacity(d.steps.len());
        for cert in &d.steps {
            steps.push(CertificateFile::new(&stage, cert));
            stage = cert.reduced.clone();
        }
        Self {
            version: FORMAT_VERSION.to_string(),
            input: RepresentationFile::from_representation(input, None),
            cancellations: d
                .cancellations
                .iter()
                .map(|c| {
                    let z = c.centers()[0].chart();
                    [z.re, z.im]
                })
                .collect(),
            core: d
                .core
                .as_ref()
                .map(|c| RepresentationFile::from_representation(c, None)),
            steps,
            areas: d.areas.clone(),
        }
    }

    /// Replays every step from the recorded input.
    pub fn verify(&self) -> Result<()> {
        let mut stage = self.input.to_relation()?;
        for step in &self.steps {
            let (input, cert) = step.to_certificate()?;
            if input.centers().len() != stage.len() {
                return Err(Error::Inconsistent(
                    "step input does not follow the previous step".into(),
                ));
            }
            cert.verify(&stage)?;
            stage = cert.reduced;
        }
        match &self.core {
            Some(core) => {
                let core = core.to_representation()?;
                if core.len() != stage.len() || !core.is_maximal() {
                    return Err(Error::Inconsistent(
                        "core is not the final maximal stage".into(),
                    ));
                }
            }
            None => {
                if stage.len() != 2 {
                    return Err(Error::Inconsistent(
                        "decomposition without core must end in a cancellation".into(),
                    ));
                }
            }
        }
        Ok(())
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    pub fn read(path: &Path) -> Result<Self> {
        Ok(serde_json::from_str(&fs::read_to_string(path)?)?)
    }

    pub fn write(&self, path: &Path) -> Result<()> {
        write_atomic(path, &self.to_json()?)
    }
}

/// Writes through a temporary file in the same directory and renames it into place.
pub fn write_atomic(path: &Path, contents: &str) -> Result<()> {
    let dir = path
        .parent()
        .filter(|p| !p.as_os_str().is_empty())
        .unwrap_or(Path::new("."));
    let name = path
        .file_name()
        .ok_or_else(|| Error::Format(format!("`{}` is not a file path", path.display())))?;
    let tmp = dir.join(format!(
        ".{}.{}.tmp",
        name.to_string_lossy(),
        std::process::id()
    ));
    {
        let mut f = fs::File::create(&tmp)?;
        f.write_all(contents.as_bytes())?;
        f.write_all(b"\n")?;
        f.sync_all()?;
    }
    fs::rename(&tmp, path).inspect_err(|_| {
        let _ = fs::remove_file(&tmp);
    })?;
    Ok(())
}

use std::collections::BTreeSet;

use serde::{Deserialize, Deserializer, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColoringError {
    #[error("color {color} on edge {edge} is outside the palette 0..{palette}")]
    ColorOutOfPalette { edge: usize, color: u32, palette: u32 },
    #[error("coloring has {got} entries but the graph has {expected} edges")]
    LengthMismatch { expected: usize, got: usize },
}

/// A total edge coloring: `colors[e]` is the color of edge `e`, drawn from
/// `0..palette`. Adjacent edges may share a color.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct EdgeColoring {
    palette: u32,
    colors: Vec<u32>,
}

impl EdgeColoring {
    pub fn new(palette: u32, colors: Vec<u32>) -> Result<Self, ColoringError> {
        if let Some((edge, &color)) = colors.iter().enumerate().find(|(_, &c)| c >= palette) {
            return Err(ColoringError::ColorOutOfPalette { edge, color, palette });
        }
        Ok(EdgeColoring { palette, colors })
    }

    /// Every edge a distinct color.
    pub fn rainbow(m: usize) -> Self {
        EdgeColoring { palette: m as u32, colors: (0..m as u32).collect() }
    }

    pub fn palette(&self) -> u32 {
        self.palette
    }

    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    /// Number of distinct colors actually present.
    pub fn colors_used(&self) -> u32 {
        self.colors.iter().collect::<BTreeSet<_>>().len() as u32
    }

    pub fn check_len(&self, m: usize) -> Result<(), ColoringError> {
        if self.colors.len() != m {
            return Err(ColoringError::LengthMismatch { expected: m, got: self.colors.len() });
        }
        Ok(())
    }

    /// Applies `perm[c]` to every color; `perm` must be a permutation of
    /// `0..palette`.
    pub fn permuted(&self, perm: &[u32]) -> Self {
        debug_assert_eq!(perm.len(), self.palette as usize);
        EdgeColoring { palette: self.palette, colors: self.colors.iter().map(|&c| perm[c as usize]).collect() }
    }
}

impl<'de> Deserialize<'de> for EdgeColoring {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            palette: u32,
            colors: Vec<u32>,
        }
        let raw = Raw::deserialize(d)?;
        EdgeColoring::new(raw.palette, raw.colors).map_err(serde::de::Error::custom)
    }
}

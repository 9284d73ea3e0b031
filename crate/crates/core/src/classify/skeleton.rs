use serde::Serialize;

use crate::error::{Error, Result};
use crate::numkernel::{fmt_rational, rat, Rational};
use crate::oracle::MarkedType;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Vertex {
    pub id: usize,
    pub weight: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Edge {
    pub endpoints: [usize; 2],
    #[serde(serialize_with = "crate::numkernel::serde_rational::ser")]
    pub length: Rational,
    /// Number of parallel copies.
    pub multiplicity: u32,
}

/// Weighted metric graph of the reduction of `y^3 = q(x)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PicardSkeleton {
    pub marked_type: MarkedType,
    pub vertices: Vec<Vertex>,
    pub edges: Vec<Edge>,
    pub betti: u32,
}

impl PicardSkeleton {
    pub fn total_weight(&self) -> u32 {
        self.vertices.iter().map(|v| v.weight).sum()
    }

    pub fn genus(&self) -> u32 {
        self.total_weight() + self.betti
    }

    pub fn weights(&self) -> Vec<u32> {
        self.vertices.iter().map(|v| v.weight).collect()
    }

    /// Lengths of the distinct edges, each listed once.
    pub fn edge_lengths(&self) -> Vec<Rational> {
        self.edges.iter().map(|e| e.length.clone()).collect()
    }

    pub fn to_dot(&self) -> String {
        let mut s = String::from("graph skeleton {\n");
        for v in &self.vertices {
            s.push_str(&format!("  v{} [label=\"{}\"];\n", v.id, v.weight));
        }
        for e in &self.edges {
            for _ in 0..e.multiplicity {
                s.push_str(&format!(
                    "  v{} -- v{} [label=\"{}\"];\n",
                    e.endpoints[0],
                    e.endpoints[1],
                    fmt_rational(&e.length)
                ));
            }
        }
        s.push_str("}\n");
        s
    }
}

/// Reduction type from the marked tree type and its edge lengths, in the
/// order returned by `edge_lengths`. Edges where the cover is totally
/// ramified shrink by 3; unramified ones lift to three parallel copies.
pub fn picard_skeleton(ty: MarkedType, lengths: &[Rational]) -> Result<PicardSkeleton> {
    let want = match ty {
        MarkedType::I => 0,
        MarkedType::II1 | MarkedType::II2 => 1,
        MarkedType::III1 | MarkedType::III2 => 2,
    };
    if lengths.len() != want {
        return Err(Error::Internal(format!("{} needs {want} lengths, got {}", ty.name(), lengths.len())));
    }
    let third = |l: &Rational| l * rat(1, 3);
    let v = |ws: &[u32]| -> Vec<Vertex> {
        ws.iter()
            .enumerate()
            .map(|(id, &weight)| Vertex { id, weight })
            .collect()
    };
    let e = |a: usize, b: usize, length: Rational, multiplicity: u32| Edge {
        endpoints: [a, b],
        length,
        multiplicity,
    };
    let (vertices, edges) = match ty {
        MarkedType::I => (v(&[3]), vec![]),
        MarkedType::II1 => (v(&[0, 1]), vec![e(0, 1, lengths[0].clone(), 3)]),
        MarkedType::II2 => (v(&[1, 2]), vec![e(0, 1, third(&lengths[0]), 1)]),
        MarkedType::III1 => (
            v(&[0, 0, 1]),
            vec![e(0, 1, lengths[0].clone(), 3), e(1, 2, third(&lengths[1]), 1)],
        ),
        MarkedType::III2 => (
            v(&[1, 1, 1]),
            vec![e(0, 1, third(&lengths[0]), 1), e(1, 2, third(&lengths[1]), 1)],
        ),
    };
    let nedges: u32 = edges.iter().map(|e| e.multiplicity).sum();
    let betti = nedges + 1 - vertices.len() as u32;
    let sk = PicardSkeleton {
        marked_type: ty,
        vertices,
        edges,
        betti,
    };
    if sk.genus() != 3 {
        return Err(Error::Internal(format!("skeleton of genus {} for {}", sk.genus(), ty.name())));
    }
    Ok(sk)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numkernel::int;

    #[test]
    fn table() {
        let one = [int(1)];
        let two = [int(1), int(2)];
        let cases: [(MarkedType, &[Rational], &[u32], u32); 5] = [
            (MarkedType::I, &[], &[3], 0),
            (MarkedType::II1, &one, &[0, 1], 2),
            (MarkedType::II2, &one, &[1, 2], 0),
            (MarkedType::III1, &two, &[0, 0, 1], 2),
            (MarkedType::III2, &two, &[1, 1, 1], 0),
        ];
        for (ty, l, w, b) in cases {
            let sk = picard_skeleton(ty, l).unwrap();
            assert_eq!(sk.weights(), w);
            assert_eq!(sk.betti, b);
            assert_eq!(sk.genus(), 3);
        }
    }

    #[test]
    fn thirds() {
        let sk = picard_skeleton(MarkedType::III2, &[int(1), int(2)]).unwrap();
        assert_eq!(sk.edge_lengths(), vec![rat(1, 3), rat(2, 3)]);
        assert!(picard_skeleton(MarkedType::II1, &[]).is_err());
    }
}

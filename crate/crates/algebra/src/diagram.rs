use std::fmt::Write as _;

use nalgebra::DVector;

use crate::base::CartanMatrix;
use crate::roots::Family;
use crate::AlgebraError;

/// Edge between two diagram nodes. `multiplicity` is the number of lines;
/// multi-edges carry an arrow from the longer root to the shorter one.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DiagramEdge {
    pub i: usize,
    pub j: usize,
    pub multiplicity: u8,
    pub arrow: Option<(usize, usize)>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct DynkinDiagram {
    pub node_count: usize,
    pub edges: Vec<DiagramEdge>,
}

impl DynkinDiagram {
    fn neighbors(&self, node: usize) -> impl Iterator<Item = (usize, u8)> + '_ {
        self.edges.iter().filter_map(move |e| {
            if e.i == node {
                Some((e.j, e.multiplicity))
            } else if e.j == node {
                Some((e.i, e.multiplicity))
            } else {
                None
            }
        })
    }

    /// Total lines meeting a node.
    fn lines(&self, node: usize) -> u8 {
        self.neighbors(node).map(|(_, m)| m).sum()
    }

    fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.node_count];
        let mut out = Vec::new();
        for start in 0..self.node_count {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            seen[start] = true;
            let mut cursor = 0;
            while cursor < comp.len() {
                let current = comp[cursor];
                cursor += 1;
                for (n, _) in self.neighbors(current) {
                    if !seen[n] {
                        seen[n] = true;
                        comp.push(n);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }
}

/// Admissibility: the printed node-and-line rules. Checked in the order
/// 2 (no loops), 5 (a triple-line component has exactly two nodes), 3 (at
/// most three lines per node), 4 (collapsing a chain of single lines must
/// leave rule 3 intact). Rule 1 (node removal) is a consequence and is
/// exercised in tests.
fn check_admissible(d: &DynkinDiagram) -> Result<(), AlgebraError> {
    // Rule 2: the graph (counting each edge once) has no cycles.
    let mut seen = vec![false; d.node_count];
    for start in 0..d.node_count {
        if seen[start] {
            continue;
        }
        let mut stack = vec![(start, usize::MAX)];
        seen[start] = true;
        while let Some((node, parent)) = stack.pop() {
            for (n, _) in d.neighbors(node) {
                if n == parent {
                    continue;
                }
                if seen[n] {
                    return Err(AlgebraError::Inadmissible { rule: 2 });
                }
                seen[n] = true;
                stack.push((n, node));
            }
        }
    }
    // Rule 5: a component containing a triple line has exactly two nodes.
    for e in &d.edges {
        if e.multiplicity == 3 {
            let comp = d.components().into_iter().find(|c| c.contains(&e.i)).unwrap();
            if comp.len() != 2 {
                return Err(AlgebraError::Inadmissible { rule: 5 });
            }
        }
    }
    // Rule 3: no node has more than three lines.
    for node in 0..d.node_count {
        if d.lines(node) > 3 {
            return Err(AlgebraError::Inadmissible { rule: 3 });
        }
    }
    // Rule 4: contracting any path of single lines must not give a node with
    // more than three lines. Equivalently the lines entering the path from
    // outside number at most three.
    for start in 0..d.node_count {
        let mut stack: Vec<(usize, usize, u32, u32)> = vec![(start, usize::MAX, d.lines(start) as u32, 0)];
        while let Some((node, parent, line_sum, edge_count)) = stack.pop() {
            if edge_count > 0 && line_sum - 2 * edge_count > 3 {
                return Err(AlgebraError::Inadmissible { rule: 4 });
            }
            for (n, mult) in d.neighbors(node) {
                if n != parent && mult == 1 {
                    stack.push((n, node, line_sum + d.lines(n) as u32, edge_count + 1));
                }
            }
        }
    }
    Ok(())
}

/// Builds the diagram of a Cartan matrix: nodes are base roots, the number of
/// lines between nodes i and j is `A[i][j]·A[j][i]`, and multi-edges carry an
/// arrow from the longer root to the shorter one. Fails with the index of the
/// first violated admissibility rule.
pub fn dynkin_diagram(
    cm: &CartanMatrix,
    base: &[DVector<f64>],
) -> Result<DynkinDiagram, AlgebraError> {
    let k = cm.size();
    assert_eq!(base.len(), k, "base and Cartan matrix sizes differ");
    let mut edges = Vec::new();
    for i in 0..k {
        for j in (i + 1)..k {
            let n = cm.entry(i, j) * cm.entry(j, i);
            if n == 0 {
                continue;
            }
            let arrow = if n >= 2 {
                let (li, lj) = (base[i].norm_squared(), base[j].norm_squared());
                assert!(li != lj, "multi-edge between roots of equal length");
                Some(if li > lj { (i, j) } else { (j, i) })
            } else {
                None
            };
            edges.push(DiagramEdge { i, j, multiplicity: n.min(4) as u8, arrow });
        }
    }
    let d = DynkinDiagram { node_count: k, edges };
    check_admissible(&d)?;
    Ok(d)
}

/// Classifies each connected component of an admissible diagram, in order of
/// smallest contained node.
pub fn classify_diagram(d: &DynkinDiagram) -> Result<Vec<(Family, usize)>, AlgebraError> {
    d.components().into_iter().map(|comp| classify_component(d, &comp)).collect()
}

fn classify_component(
    d: &DynkinDiagram,
    comp: &[usize],
) -> Result<(Family, usize), AlgebraError> {
    let k = comp.len();
    if k == 1 {
        return Ok((Family::A, 1));
    }
    let in_comp = |e: &&DiagramEdge| comp.contains(&e.i);
    if d.edges.iter().filter(in_comp).any(|e| e.multiplicity == 3) {
        return if k == 2 { Ok((Family::G, 2)) } else { Err(AlgebraError::Unclassifiable) };
    }
    let doubles: Vec<&DiagramEdge> =
        d.edges.iter().filter(in_comp).filter(|e| e.multiplicity == 2).collect();
    let degree = |node: usize| d.neighbors(node).count();
    if let [double] = doubles.as_slice() {
        // B, C, and F diagrams are paths with a single double edge.
        if comp.iter().any(|&n| degree(n) > 2) {
            return Err(AlgebraError::Unclassifiable);
        }
        let at_end = [double.i, double.j].into_iter().find(|&n| degree(n) == 1);
        match at_end {
            Some(leaf) => {
                if k == 2 {
                    return Ok((Family::B, 2));
                }
                // Arrow points from longer to shorter: a short end root is a
                // B diagram, a long one is C.
                let (_, to) = double.arrow.expect("double edges carry arrows");
                Ok((if to == leaf { Family::B } else { Family::C }, k))
            }
            None => {
                // Interior double edge: only the four-node F diagram remains.
                if k == 4 { Ok((Family::F, 4)) } else { Err(AlgebraError::Unclassifiable) }
            }
        }
    } else if !doubles.is_empty() {
        Err(AlgebraError::Unclassifiable)
    } else {
        let branch: Vec<usize> = comp.iter().copied().filter(|&n| degree(n) >= 3).collect();
        match branch.as_slice() {
            [] => Ok((Family::A, k)),
            [center] if degree(*center) == 3 => {
                let mut arms: Vec<usize> = d
                    .neighbors(*center)
                    .map(|(first, _)| {
                        let mut length = 1;
                        let mut prev = *center;
                        let mut node = first;
                        while let Some((next, _)) =
                            d.neighbors(node).find(|&(n, _)| n != prev)
                        {
                            prev = node;
                            node = next;
                            length += 1;
                        }
                        length
                    })
                    .collect();
                arms.sort_unstable();
                match arms.as_slice() {
                    [1, 1, _] => Ok((Family::D, k)),
                    [1, 2, 2] => Ok((Family::E, 6)),
                    [1, 2, 3] => Ok((Family::E, 7)),
                    [1, 2, 4] => Ok((Family::E, 8)),
                    _ => Err(AlgebraError::Unclassifiable),
                }
            }
            _ => Err(AlgebraError::Unclassifiable),
        }
    }
}

/// Deterministic text form: one line per node, then one line per edge as
/// `i - j xN` with an optional `arrow from>to` suffix.
pub fn diagram_text(d: &DynkinDiagram) -> String {
    let mut out = String::new();
    for node in 0..d.node_count {
        let _ = writeln!(out, "node {node}");
    }
    let mut edges = d.edges.clone();
    edges.sort_by_key(|e| (e.i, e.j));
    for e in edges {
        let _ = write!(out, "{} - {} x{}", e.i, e.j, e.multiplicity);
        if let Some((from, to)) = e.arrow {
            let _ = write!(out, " arrow {from}>{to}");
        }
        out.push('\n');
    }
    out
}

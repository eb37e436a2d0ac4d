//! Python bindings: a thin `Drawing` wrapper plus the main operations
//! (ply, vertex-ply, empty-ply verification, lemma report, constructions,
//! search, formulas).

use emptyply::constructions as cons;
use emptyply::drawing;
use emptyply::geometry::Point;
use emptyply::plycore;
use emptyply::search;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

fn err<E: std::fmt::Display>(e: E) -> PyErr {
    PyValueError::new_err(e.to_string())
}

#[pyclass(from_py_object)]
#[derive(Clone)]
struct Drawing {
    inner: drawing::Drawing,
}

#[pymethods]
impl Drawing {
    #[new]
    fn new(n: usize, edges: Vec<(usize, usize)>, positions: Vec<(f64, f64)>) -> PyResult<Self> {
        let graph = drawing::Graph::new(n, edges).map_err(err)?;
        let d = drawing::Drawing::new(
            graph,
            positions.into_iter().map(|(x, y)| Point::new(x, y)).collect(),
        );
        let violations = d.validate();
        if !violations.is_empty() {
            return Err(err(format!("invalid drawing: {}", violations[0])));
        }
        Ok(Drawing { inner: d })
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.graph.vertex_count()
    }

    #[getter]
    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.graph.edges().to_vec()
    }

    #[getter]
    fn positions(&self) -> Vec<(f64, f64)> {
        self.inner.positions.iter().map(|p| (p.x, p.y)).collect()
    }

    fn radii(&self) -> Vec<f64> {
        self.inner.ply_radii()
    }

    fn ply(&self) -> PyResult<(usize, (f64, f64))> {
        let (k, w) = plycore::ply(&self.inner).map_err(err)?;
        Ok((k, (w.x, w.y)))
    }

    fn vertex_ply(&self) -> PyResult<(usize, usize)> {
        plycore::vertex_ply(&self.inner).map_err(err)
    }

    fn is_empty_ply(&self) -> PyResult<(bool, Option<(usize, usize)>)> {
        plycore::is_empty_ply(&self.inner).map_err(err)
    }

    fn count_crossings(&self) -> (usize, usize) {
        let c = plycore::count_crossings(&self.inner);
        (c.proper, c.collinear_overlap)
    }

    fn quarter_shped_crossings(&self) -> usize {
        plycore::quarter_shped(&self.inner).1
    }

    fn penalty(&self) -> PyResult<f64> {
        search::penalty(&self.inner).map_err(err)
    }

    #[pyo3(signature = (tree_root=None))]
    fn lemma_report(&self, tree_root: Option<usize>) -> PyResult<Vec<(String, bool, Option<String>)>> {
        let rep = plycore::lemma_report(&self.inner, tree_root).map_err(err)?;
        let mut out = vec![
            ("edge_ratio".to_string(), rep.edge_ratio.ok, rep.edge_ratio.witness),
            ("radius_ratio".to_string(), rep.radius_ratio.ok, rep.radius_ratio.witness),
            ("shrunk_disjoint".to_string(), rep.shrunk_disjoint.ok, rep.shrunk_disjoint.witness),
            ("area_bound".to_string(), rep.area_bound.ok, rep.area_bound.witness),
            ("degree".to_string(), rep.degree.ok, rep.degree.witness),
            ("five_h".to_string(), rep.five_h.ok, rep.five_h.witness),
        ];
        if let Some(c) = rep.claims_ab {
            out.push(("claims_ab".to_string(), c.ok, c.witness));
        }
        Ok(out)
    }

    fn to_json(&self) -> String {
        emptyply::format::DrawingDocument::from_drawing(&self.inner, None).to_json()
    }

    #[staticmethod]
    fn from_json(s: &str) -> PyResult<Self> {
        let d = emptyply::format::DrawingDocument::from_json(s)
            .map_err(err)?
            .to_drawing()
            .map_err(err)?;
        Ok(Drawing { inner: d })
    }
}

fn wrap(d: drawing::Drawing) -> Drawing {
    Drawing { inner: d }
}

#[pyfunction]
fn star24() -> Drawing {
    wrap(cons::star24())
}

#[pyfunction]
fn small_layout(name: &str) -> PyResult<Drawing> {
    cons::small_layout(name).map(wrap).map_err(err)
}

#[pyfunction]
fn nested_triangles(levels: usize, variant: &str) -> PyResult<Drawing> {
    let v = match variant {
        "natural" => cons::NestedVariant::Natural,
        "planar_ply4" => cons::NestedVariant::PlanarPly4,
        "nonplanar_ply5" => cons::NestedVariant::NonplanarPly5,
        other => return Err(err(format!("unknown variant {other}"))),
    };
    cons::nested_triangles(levels, v).map(wrap).map_err(err)
}

#[pyfunction]
fn theta_graph(m: usize, variant: &str) -> PyResult<Drawing> {
    let v = match variant {
        "planar" => cons::ThetaVariant::Planar,
        "nonplanar" => cons::ThetaVariant::Nonplanar,
        other => return Err(err(format!("unknown variant {other}"))),
    };
    cons::theta_graph(m, v).map(wrap).map_err(err)
}

#[pyfunction]
fn orthogonal_tree(d: usize, q: f64, k: usize) -> PyResult<Drawing> {
    cons::orthogonal_tree(d, q, k).map(wrap).map_err(err)
}

#[pyfunction]
fn tiling_square(rows: usize, cols: usize) -> PyResult<(Drawing, Drawing)> {
    let (b, s) = cons::tiling_square(rows, cols).map_err(err)?;
    Ok((wrap(b), wrap(s)))
}

#[pyfunction]
#[pyo3(signature = (family, n=None, m=None, d=None, k=None, seed=1, restarts=8, iterations=20000))]
#[allow(clippy::too_many_arguments)]
fn search_empty_ply(
    family: &str,
    n: Option<usize>,
    m: Option<usize>,
    d: Option<usize>,
    k: Option<usize>,
    seed: u64,
    restarts: usize,
    iterations: usize,
) -> PyResult<(Drawing, f64, bool)> {
    let fam = match family {
        "complete" => cons::Family::Complete { n: n.ok_or_else(|| err("missing n"))? },
        "bipartite" => cons::Family::CompleteBipartite {
            n: n.ok_or_else(|| err("missing n"))?,
            m: m.ok_or_else(|| err("missing m"))?,
        },
        "dary_tree" => cons::Family::DaryTree {
            d: d.ok_or_else(|| err("missing d"))?,
            k: k.ok_or_else(|| err("missing k"))?,
        },
        other => return Err(err(format!("unknown family {other}"))),
    };
    let graph = cons::abstract_family(fam).map_err(err)?;
    let cfg = search::SearchConfig { seed, restarts, iterations, ..Default::default() };
    let r = search::optimize_empty_ply(&graph, &cfg).map_err(err)?;
    Ok((wrap(r.drawing), r.penalty, r.status == search::SearchStatus::Success))
}

#[pyfunction]
fn k25_bounds(alpha: f64) -> PyResult<(Option<f64>, Option<f64>, bool)> {
    let b = emptyply::analysis::k25_bounds(alpha).map_err(err)?;
    Ok((b.lower, b.upper, b.feasible))
}

#[pyfunction]
fn shrink_limit(q: f64) -> PyResult<(f64, f64, f64)> {
    let s = emptyply::analysis::shrink_limit(q).map_err(err)?;
    Ok((s.f, s.dist_v1_w, s.dist_v3_w))
}

#[pyfunction]
fn fn_recurrence(n: usize) -> PyResult<f64> {
    emptyply::analysis::fn_recurrence(n).map_err(err)
}

#[pyfunction]
fn k8_region(x: f64, y: f64) -> String {
    format!("{:?}", emptyply::analysis::k8_region(Point::new(x, y)))
}

#[pyfunction]
fn k2m_analysis() -> (f64, f64, f64, usize, usize, usize) {
    let s = emptyply::analysis::k2m_analysis();
    (s.alpha_d, s.beta1, s.beta2, s.outer_capacity, s.inner_capacity_per_half, s.combined_bound)
}

#[pymodule]
fn emptyply_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Drawing>()?;
    m.add_function(wrap_pyfunction!(star24, m)?)?;
    m.add_function(wrap_pyfunction!(small_layout, m)?)?;
    m.add_function(wrap_pyfunction!(nested_triangles, m)?)?;
    m.add_function(wrap_pyfunction!(theta_graph, m)?)?;
    m.add_function(wrap_pyfunction!(orthogonal_tree, m)?)?;
    m.add_function(wrap_pyfunction!(tiling_square, m)?)?;
    m.add_function(wrap_pyfunction!(search_empty_ply, m)?)?;
    m.add_function(wrap_pyfunction!(k25_bounds, m)?)?;
    m.add_function(wrap_pyfunction!(shrink_limit, m)?)?;
    m.add_function(wrap_pyfunction!(fn_recurrence, m)?)?;
    m.add_function(wrap_pyfunction!(k8_region, m)?)?;
    m.add_function(wrap_pyfunction!(k2m_analysis, m)?)?;
    Ok(())
}

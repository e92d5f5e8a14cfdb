//! The scalg text format: a line-based description of structure-constant
//! objects over one ground field.
//!
//! ```text
//! # comment
//! scalars rational            | scalars gf <p>
//! object hopf <name>          dim, unit, counit, mul, comul, [antipode]
//! object algebra <name>       dim, unit, mul
//! object action <name> hopf <H> algebra <A>
//!                             act entries, optional comul entries for a
//!                             coaction (making the object a Yetter-Drinfeld
//!                             algebra declaration)
//! object group <name>         order, row lines (Cayley table)
//! object grading <name> group <G> algebra <A>
//!                             deg entries
//! ```
//!
//! Coefficient directives are `unit i c`, `counit i c`, `mul i j k c`,
//! `comul i j k c`, `antipode i j c` (the coefficient of `e_i` in `S(e_j)`)
//! and `act i j k c`; rationals are written `p/q` or as integers, indices
//! are 0-based, duplicate entries for one index tuple are summed, and every
//! object closes with `end`. A hopf object without antipode entries has its
//! antipode reconstructed by the solver at load time.

use std::collections::BTreeMap;
use std::fmt;

use scalg::field::{Field, Scalar};
use scalg::hopf::HopfAlgebra;
use scalg::matrix::DenseMatrix;
use scalg::modalg::{graded_algebra, Algebra, Group, ModuleAlgebra};
use scalg::tensor::StructureTensor;

#[derive(Debug)]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.line == 0 {
            write!(f, "{}", self.message)
        } else {
            write!(f, "line {}: {}", self.line, self.message)
        }
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Clone)]
pub enum ObjectData {
    Hopf(HopfAlgebra),
    Algebra(Algebra),
    Action {
        hopf_name: String,
        algebra_name: String,
        module: ModuleAlgebra,
        /// Optional coaction making this a Yetter-Drinfeld declaration:
        /// `delta(a_i) = sum comul[i][j][k] e_j (x) a_k`.
        coaction: Option<StructureTensor>,
    },
    Group(Group),
    Grading {
        group_name: String,
        algebra_name: String,
        module: ModuleAlgebra,
        degrees: Vec<usize>,
    },
}

#[derive(Debug, Clone)]
pub struct ScalgObject {
    pub name: String,
    pub data: ObjectData,
}

#[derive(Debug, Clone)]
pub struct ScalgDocument {
    pub field: Field,
    pub objects: Vec<ScalgObject>,
}

impl ScalgDocument {
    pub fn find(&self, name: &str) -> Option<&ScalgObject> {
        self.objects.iter().find(|o| o.name == name)
    }
}

struct RawEntries {
    dim: Option<usize>,
    order: Option<usize>,
    unit: BTreeMap<usize, Scalar>,
    counit: BTreeMap<usize, Scalar>,
    mul: BTreeMap<(usize, usize, usize), Scalar>,
    comul: BTreeMap<(usize, usize, usize), Scalar>,
    antipode: BTreeMap<(usize, usize), Scalar>,
    act: BTreeMap<(usize, usize, usize), Scalar>,
    rows: BTreeMap<usize, Vec<usize>>,
    degrees: BTreeMap<usize, usize>,
}

impl RawEntries {
    fn new() -> Self {
        RawEntries {
            dim: None,
            order: None,
            unit: BTreeMap::new(),
            counit: BTreeMap::new(),
            mul: BTreeMap::new(),
            comul: BTreeMap::new(),
            antipode: BTreeMap::new(),
            act: BTreeMap::new(),
            rows: BTreeMap::new(),
            degrees: BTreeMap::new(),
        }
    }
}

struct OpenObject {
    kind: String,
    name: String,
    refs: Vec<(String, String)>,
    entries: RawEntries,
    start_line: usize,
}

pub fn parse_scalg(text: &str) -> Result<ScalgDocument, ParseError> {
    let mut field: Option<Field> = None;
    let mut objects: Vec<ScalgObject> = Vec::new();
    let mut open: Option<OpenObject> = None;

    let err = |line: usize, message: String| ParseError { line, message };

    for (idx, raw_line) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = match raw_line.find('#') {
            Some(pos) => &raw_line[..pos],
            None => raw_line,
        };
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.is_empty() {
            continue;
        }
        match tokens[0] {
            "scalars" => {
                if field.is_some() {
                    return Err(err(line_no, "duplicate scalars directive".into()));
                }
                field = Some(match tokens.get(1) {
                    Some(&"rational") => Field::Rational,
                    Some(&"gf") => {
                        let p: u64 = tokens
                            .get(2)
                            .and_then(|t| t.parse().ok())
                            .ok_or_else(|| err(line_no, "gf needs a modulus".into()))?;
                        Field::prime(p).map_err(|_| err(line_no, "modulus not prime".into()))?
                    }
                    _ => return Err(err(line_no, "unknown field descriptor".into())),
                });
            }
            "object" => {
                if open.is_some() {
                    return Err(err(line_no, "previous object not closed with end".into()));
                }
                if field.is_none() {
                    return Err(err(line_no, "scalars directive must come first".into()));
                }
                let kind = tokens
                    .get(1)
                    .ok_or_else(|| err(line_no, "object needs a kind".into()))?
                    .to_string();
                if !["hopf", "algebra", "action", "group", "grading"].contains(&kind.as_str()) {
                    return Err(err(line_no, format!("unknown object kind `{kind}`")));
                }
                let name = tokens
                    .get(2)
                    .ok_or_else(|| err(line_no, "object needs a name".into()))?
                    .to_string();
                if objects.iter().any(|o| o.name == name) {
                    return Err(err(line_no, format!("duplicate object name `{name}`")));
                }
                let mut refs = Vec::new();
                let mut rest = &tokens[3..];
                while !rest.is_empty() {
                    if rest.len() < 2 {
                        return Err(err(line_no, "dangling reference keyword".into()));
                    }
                    refs.push((rest[0].to_string(), rest[1].to_string()));
                    rest = &rest[2..];
                }
                open = Some(OpenObject {
                    kind,
                    name,
                    refs,
                    entries: RawEntries::new(),
                    start_line: line_no,
                });
            }
            "end" => {
                let obj = open
                    .take()
                    .ok_or_else(|| err(line_no, "end outside of an object".into()))?;
                let built = build_object(field.expect("field set"), obj, &objects, line_no)?;
                objects.push(built);
            }
            directive => {
                let obj = open
                    .as_mut()
                    .ok_or_else(|| err(line_no, format!("`{directive}` outside of an object")))?;
                let field = field.expect("field set before objects");
                parse_directive(field, obj, &tokens, line_no)?;
            }
        }
    }
    if let Some(obj) = open {
        return Err(err(
            obj.start_line,
            format!("object `{}` not closed with end", obj.name),
        ));
    }
    let field = field.ok_or_else(|| err(0, "missing scalars directive".into()))?;
    Ok(ScalgDocument { field, objects })
}

fn parse_directive(
    field: Field,
    obj: &mut OpenObject,
    tokens: &[&str],
    line_no: usize,
) -> Result<(), ParseError> {
    let err = |message: String| ParseError { line: line_no, message };
    let index = |t: Option<&&str>| -> Result<usize, ParseError> {
        t.and_then(|s| s.parse().ok())
            .ok_or_else(|| err("expected an index".into()))
    };
    let scalar = |t: Option<&&str>| -> Result<Scalar, ParseError> {
        let text = t.ok_or_else(|| err("expected a coefficient".into()))?;
        Scalar::parse(&field, text).map_err(|e| err(e.to_string()))
    };
    let add = |map: &mut BTreeMap<(usize, usize, usize), Scalar>, key, value: Scalar| {
        let slot = map.entry(key).or_insert_with(|| field.zero());
        *slot = slot.add(&value);
    };
    match tokens[0] {
        "dim" => obj.entries.dim = Some(index(tokens.get(1))?),
        "order" => obj.entries.order = Some(index(tokens.get(1))?),
        "unit" => {
            let i = index(tokens.get(1))?;
            let c = scalar(tokens.get(2))?;
            let slot = obj.entries.unit.entry(i).or_insert_with(|| field.zero());
            *slot = slot.add(&c);
        }
        "counit" => {
            let i = index(tokens.get(1))?;
            let c = scalar(tokens.get(2))?;
            let slot = obj.entries.counit.entry(i).or_insert_with(|| field.zero());
            *slot = slot.add(&c);
        }
        "mul" => {
            let key = (index(tokens.get(1))?, index(tokens.get(2))?, index(tokens.get(3))?);
            add(&mut obj.entries.mul, key, scalar(tokens.get(4))?);
        }
        "comul" => {
            let key = (index(tokens.get(1))?, index(tokens.get(2))?, index(tokens.get(3))?);
            add(&mut obj.entries.comul, key, scalar(tokens.get(4))?);
        }
        "act" => {
            let key = (index(tokens.get(1))?, index(tokens.get(2))?, index(tokens.get(3))?);
            add(&mut obj.entries.act, key, scalar(tokens.get(4))?);
        }
        "antipode" => {
            let key = (index(tokens.get(1))?, index(tokens.get(2))?);
            let c = scalar(tokens.get(3))?;
            let slot = obj.entries.antipode.entry(key).or_insert_with(|| field.zero());
            *slot = slot.add(&c);
        }
        "row" => {
            let i = index(tokens.get(1))?;
            let entries: Result<Vec<usize>, _> =
                tokens[2..].iter().map(|t| t.parse::<usize>()).collect();
            let entries = entries.map_err(|_| err("row entries must be indices".into()))?;
            if obj.entries.rows.insert(i, entries).is_some() {
                return Err(err(format!("duplicate row {i}")));
            }
        }
        "deg" => {
            let i = index(tokens.get(1))?;
            let g = index(tokens.get(2))?;
            if obj.entries.degrees.insert(i, g).is_some() {
                return Err(err(format!("duplicate degree for basis {i}")));
            }
        }
        other => return Err(err(format!("unknown directive `{other}`"))),
    }
    Ok(())
}

fn build_object(
    field: Field,
    obj: OpenObject,
    existing: &[ScalgObject],
    line_no: usize,
) -> Result<ScalgObject, ParseError> {
    let err = |message: String| ParseError { line: line_no, message };
    let entries = &obj.entries;

    let tensor = |map: &BTreeMap<(usize, usize, usize), Scalar>,
                  dims: (usize, usize, usize)|
     -> Result<StructureTensor, ParseError> {
        let mut t = StructureTensor::new(field, dims);
        for (&(i, j, k), c) in map {
            if c.is_zero() {
                continue;
            }
            t.add_entry(i, j, k, c.clone()).map_err(|e| err(e.to_string()))?;
        }
        Ok(t)
    };
    let vector = |map: &BTreeMap<usize, Scalar>, n: usize| -> Result<Vec<Scalar>, ParseError> {
        let mut v = vec![field.zero(); n];
        for (&i, c) in map {
            if i >= n {
                return Err(err(format!("index {i} out of range for dimension {n}")));
            }
            v[i] = c.clone();
        }
        Ok(v)
    };

    let data = match obj.kind.as_str() {
        "hopf" => {
            let n = entries.dim.ok_or_else(|| err("hopf object needs dim".into()))?;
            let mul = tensor(&entries.mul, (n, n, n))?;
            let comul = tensor(&entries.comul, (n, n, n))?;
            let unit = vector(&entries.unit, n)?;
            let counit = vector(&entries.counit, n)?;
            let antipode = if entries.antipode.is_empty() {
                None
            } else {
                let mut s = DenseMatrix::zero(field, n, n);
                for (&(i, j), c) in &entries.antipode {
                    if i >= n || j >= n {
                        return Err(err(format!("antipode index ({i},{j}) out of range")));
                    }
                    s.set(i, j, c.clone());
                }
                Some(s)
            };
            let hopf = HopfAlgebra::new(mul, unit, comul, counit, antipode)
                .map_err(|e| err(e.to_string()))?;
            ObjectData::Hopf(hopf)
        }
        "algebra" => {
            let n = entries.dim.ok_or_else(|| err("algebra object needs dim".into()))?;
            let mul = tensor(&entries.mul, (n, n, n))?;
            let unit = vector(&entries.unit, n)?;
            let alg = Algebra::new(mul, unit).map_err(|e| err(e.to_string()))?;
            ObjectData::Algebra(alg)
        }
        "action" => {
            let hopf_name = reference(&obj.refs, "hopf")
                .ok_or_else(|| err("action object needs `hopf <name>`".into()))?;
            let algebra_name = reference(&obj.refs, "algebra")
                .ok_or_else(|| err("action object needs `algebra <name>`".into()))?;
            let hopf = match existing.iter().find(|o| o.name == hopf_name) {
                Some(ScalgObject { data: ObjectData::Hopf(h), .. }) => h.clone(),
                _ => return Err(err(format!("unresolved hopf reference `{hopf_name}`"))),
            };
            let alg = match existing.iter().find(|o| o.name == algebra_name) {
                Some(ScalgObject { data: ObjectData::Algebra(a), .. }) => a.clone(),
                _ => return Err(err(format!("unresolved algebra reference `{algebra_name}`"))),
            };
            let m = alg.dim;
            let action = tensor(&entries.act, (hopf.dim, m, m))?;
            let coaction = if entries.comul.is_empty() {
                None
            } else {
                Some(tensor(&entries.comul, (m, hopf.dim, m))?)
            };
            let module =
                ModuleAlgebra::new(hopf, alg, action).map_err(|e| err(e.to_string()))?;
            ObjectData::Action {
                hopf_name,
                algebra_name,
                module,
                coaction,
            }
        }
        "group" => {
            let n = entries.order.ok_or_else(|| err("group object needs order".into()))?;
            let mut cayley = Vec::with_capacity(n);
            for i in 0..n {
                let row = entries
                    .rows
                    .get(&i)
                    .ok_or_else(|| err(format!("missing row {i}")))?;
                if row.len() != n {
                    return Err(err(format!("row {i} must have {n} entries")));
                }
                cayley.push(row.clone());
            }
            let group = Group::new(cayley).map_err(|e| err(e.to_string()))?;
            ObjectData::Group(group)
        }
        "grading" => {
            let group_name = reference(&obj.refs, "group")
                .ok_or_else(|| err("grading object needs `group <name>`".into()))?;
            let algebra_name = reference(&obj.refs, "algebra")
                .ok_or_else(|| err("grading object needs `algebra <name>`".into()))?;
            let group = match existing.iter().find(|o| o.name == group_name) {
                Some(ScalgObject { data: ObjectData::Group(g), .. }) => g.clone(),
                _ => return Err(err(format!("unresolved group reference `{group_name}`"))),
            };
            let alg = match existing.iter().find(|o| o.name == algebra_name) {
                Some(ScalgObject { data: ObjectData::Algebra(a), .. }) => a.clone(),
                _ => return Err(err(format!("unresolved algebra reference `{algebra_name}`"))),
            };
            let mut degrees = vec![group.identity; alg.dim];
            for (&i, &g) in &entries.degrees {
                if i >= alg.dim {
                    return Err(err(format!("degree index {i} out of range")));
                }
                if g >= group.order {
                    return Err(err(format!("degree value {g} out of range")));
                }
                degrees[i] = g;
            }
            let module = graded_algebra(field, &group, alg, &degrees)
                .map_err(|e| err(e.to_string()))?;
            ObjectData::Grading {
                group_name,
                algebra_name,
                module,
                degrees,
            }
        }
        other => return Err(err(format!("unknown object kind `{other}`"))),
    };
    Ok(ScalgObject { name: obj.name, data })
}

fn reference(refs: &[(String, String)], keyword: &str) -> Option<String> {
    refs.iter()
        .find(|(k, _)| k == keyword)
        .map(|(_, v)| v.clone())
}

/// Canonical text for a document: entries in lexicographic index order, so
/// `parse(serialize(d))` reproduces `d` exactly and serialization is
/// byte-stable.
pub fn serialize(doc: &ScalgDocument) -> String {
    let mut out = String::new();
    out.push_str(&format!("scalars {}\n", doc.field));
    for obj in &doc.objects {
        out.push('\n');
        serialize_object(&mut out, obj);
    }
    out
}

fn serialize_object(out: &mut String, obj: &ScalgObject) {
    let name = &obj.name;
    match &obj.data {
        ObjectData::Hopf(h) => {
            out.push_str(&format!("object hopf {name}\n"));
            out.push_str(&format!("dim {}\n", h.dim));
            push_vector(out, "unit", &h.unit);
            push_vector(out, "counit", &h.counit);
            push_tensor(out, "mul", &h.mul);
            push_tensor(out, "comul", &h.comul);
            push_matrix(out, "antipode", &h.antipode);
            out.push_str("end\n");
        }
        ObjectData::Algebra(a) => {
            out.push_str(&format!("object algebra {name}\n"));
            out.push_str(&format!("dim {}\n", a.dim));
            push_vector(out, "unit", &a.unit);
            push_tensor(out, "mul", &a.mul);
            out.push_str("end\n");
        }
        ObjectData::Action { hopf_name, algebra_name, module, coaction } => {
            out.push_str(&format!(
                "object action {name} hopf {hopf_name} algebra {algebra_name}\n"
            ));
            push_tensor(out, "act", &module.action);
            if let Some(coaction) = coaction {
                push_tensor(out, "comul", coaction);
            }
            out.push_str("end\n");
        }
        ObjectData::Group(g) => {
            out.push_str(&format!("object group {name}\n"));
            out.push_str(&format!("order {}\n", g.order));
            for (i, row) in g.cayley.iter().enumerate() {
                let cells: Vec<String> = row.iter().map(|e| e.to_string()).collect();
                out.push_str(&format!("row {i} {}\n", cells.join(" ")));
            }
            out.push_str("end\n");
        }
        ObjectData::Grading { group_name, algebra_name, degrees, .. } => {
            out.push_str(&format!(
                "object grading {name} group {group_name} algebra {algebra_name}\n"
            ));
            for (i, g) in degrees.iter().enumerate() {
                out.push_str(&format!("deg {i} {g}\n"));
            }
            out.push_str("end\n");
        }
    }
}

fn push_vector(out: &mut String, directive: &str, v: &[Scalar]) {
    for (i, c) in v.iter().enumerate() {
        if !c.is_zero() {
            out.push_str(&format!("{directive} {i} {c}\n"));
        }
    }
}

fn push_tensor(out: &mut String, directive: &str, t: &StructureTensor) {
    for (&(i, j, k), c) in t.iter() {
        out.push_str(&format!("{directive} {i} {j} {k} {c}\n"));
    }
}

fn push_matrix(out: &mut String, directive: &str, m: &DenseMatrix) {
    for i in 0..m.rows {
        for j in 0..m.cols {
            let c = m.get(i, j);
            if !c.is_zero() {
                out.push_str(&format!("{directive} {i} {j} {c}\n"));
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const F1: &str = "scalars rational\nobject hopf kc2\ndim 2\nunit 0 1\nmul 0 0 0 1\nmul 0 1 1 1\nmul 1 0 1 1\nmul 1 1 0 1\ncomul 0 0 0 1\ncomul 1 1 1 1\ncounit 0 1\ncounit 1 1\nantipode 0 0 1\nantipode 1 1 1\nend\n";

    #[test]
    fn parses_the_reference_fixture() {
        let doc = parse_scalg(F1).unwrap();
        assert_eq!(doc.objects.len(), 1);
        match &doc.objects[0].data {
            ObjectData::Hopf(h) => {
                assert_eq!(h.dim, 2);
                assert!(h.verify().all_passed());
            }
            _ => panic!("expected a hopf object"),
        }
    }

    #[test]
    fn rejects_non_prime_modulus() {
        let e = parse_scalg("scalars gf 4\n").unwrap_err();
        assert!(e.to_string().contains("not prime"));
    }

    #[test]
    fn duplicate_entries_are_summed() {
        let text = "scalars rational\nobject algebra a\ndim 1\nunit 0 1\nmul 0 0 0 1/2\nmul 0 0 0 1/2\nend\n";
        let doc = parse_scalg(text).unwrap();
        match &doc.objects[0].data {
            ObjectData::Algebra(a) => assert!(a.mul.get(0, 0, 0).is_one()),
            _ => panic!("expected an algebra"),
        }
    }

    #[test]
    fn omitted_antipode_is_solved() {
        let text = F1.replace("antipode 0 0 1\nantipode 1 1 1\n", "");
        let doc = parse_scalg(&text).unwrap();
        match &doc.objects[0].data {
            ObjectData::Hopf(h) => {
                assert!(h.antipode.get(0, 0).is_one());
                assert!(h.antipode.get(1, 1).is_one());
            }
            _ => panic!("expected a hopf object"),
        }
    }

    #[test]
    fn syntax_errors_carry_line_numbers() {
        let e = parse_scalg("scalars rational\nobject hopf h\nwibble 1\nend\n").unwrap_err();
        assert_eq!(e.line, 3);
        let e = parse_scalg("scalars rational\nmul 0 0 0 1\n").unwrap_err();
        assert_eq!(e.line, 2);
        let e = parse_scalg("scalars rational\nobject hopf h\ndim 1\nmul 0 0 5 1\nend\n")
            .unwrap_err();
        assert!(e.to_string().contains("out of range"));
    }

    #[test]
    fn serialize_roundtrips_the_fixture() {
        let doc = parse_scalg(F1).unwrap();
        let text = serialize(&doc);
        let again = parse_scalg(&text).unwrap();
        assert_eq!(serialize(&again), text);
        match (&doc.objects[0].data, &again.objects[0].data) {
            (ObjectData::Hopf(a), ObjectData::Hopf(b)) => assert_eq!(a, b),
            _ => panic!("expected hopf objects"),
        }
    }
}

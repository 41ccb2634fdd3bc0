//! C ABI over `cone-angles`.
//!
//! Cones are opaque `CaCone` handles owned by the caller and released with
//! [`ca_cone_free`]. Every function returns a [`CaStatus`]; on failure the
//! message is available from [`ca_last_error`] on the same thread.
//! Vectors and matrices are row-major `double` buffers.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use cone_angles::angles::{
    cos_dixmier_exact, cos_dixmier_iterative, cos_dixmier_oracle, friedrichs_reduction, AngleResult,
};
use cone_angles::projection::project;
use cone_angles::{ConeSpec, Error, PolyhedralCone, Vector};

/// Opaque cone handle.
pub struct CaCone(PolyhedralCone);

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CaStatus {
    Ok = 0,
    NullPointer = 1,
    DimensionMismatch = 2,
    DimensionOutOfRange = 3,
    NonFinite = 4,
    InvalidArgument = 5,
    CapExceeded = 6,
    Numerical = 7,
    Parse = 8,
    BufferTooSmall = 9,
    Panic = 10,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CaMethod {
    Exact = 0,
    Iterative = 1,
    Oracle = 2,
}

/// Cosine, angle and flags of an angle computation.
#[repr(C)]
#[derive(Debug, Clone, Copy, Default)]
pub struct CaAngle {
    pub cosine: f64,
    pub angle: f64,
    pub attained: bool,
    pub flagged: bool,
    /// Whether a certificate was written to the caller's buffers.
    pub has_certificate: bool,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> CaStatus {
    match e {
        Error::DimensionMismatch { .. } => CaStatus::DimensionMismatch,
        Error::DimensionOutOfRange(_) => CaStatus::DimensionOutOfRange,
        Error::NonFinite(_) => CaStatus::NonFinite,
        Error::CapExceeded { .. } => CaStatus::CapExceeded,
        Error::Numerical(_) => CaStatus::Numerical,
        Error::Parse(_) | Error::Io { .. } => CaStatus::Parse,
        _ => CaStatus::InvalidArgument,
    }
}

enum Fail {
    Status(CaStatus, String),
    Core(Error),
}

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail::Core(e)
    }
}

fn null(what: &str) -> Fail {
    Fail::Status(CaStatus::NullPointer, format!("{what} is null"))
}

fn guard(f: impl FnOnce() -> Result<(), Fail>) -> CaStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => CaStatus::Ok,
        Ok(Err(Fail::Status(s, msg))) => {
            set_error(msg);
            s
        }
        Ok(Err(Fail::Core(e))) => {
            set_error(e.to_string());
            status_of(&e)
        }
        Err(_) => {
            set_error("internal panic".into());
            CaStatus::Panic
        }
    }
}

unsafe fn cone<'a>(p: *const CaCone, what: &str) -> Result<&'a PolyhedralCone, Fail> {
    p.as_ref().map(|c| &c.0).ok_or_else(|| null(what))
}

unsafe fn slice<'a>(p: *const f64, len: usize, what: &str) -> Result<&'a [f64], Fail> {
    if len == 0 {
        return Ok(&[]);
    }
    if p.is_null() {
        return Err(null(what));
    }
    Ok(std::slice::from_raw_parts(p, len))
}

unsafe fn store(out: *mut *mut CaCone, k: PolyhedralCone) -> Result<(), Fail> {
    if out.is_null() {
        return Err(null("out"));
    }
    *out = Box::into_raw(Box::new(CaCone(k)));
    Ok(())
}

unsafe fn write_vector(out: *mut f64, v: &Vector) -> Result<(), Fail> {
    if out.is_null() {
        return Err(null("output buffer"));
    }
    ptr::copy_nonoverlapping(v.as_slice().as_ptr(), out, v.len());
    Ok(())
}

/// Message of the last failure on this thread, or null. Valid until the
/// next call on this thread.
#[no_mangle]
pub extern "C" fn ca_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Builds a cone from `count` generators of length `dim`, row-major.
///
/// # Safety
/// `data` must point to `count * dim` doubles and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ca_cone_from_generators(
    dim: usize,
    data: *const f64,
    count: usize,
    tol: f64,
    out: *mut *mut CaCone,
) -> CaStatus {
    guard(|| {
        let len = count
            .checked_mul(dim)
            .ok_or_else(|| Fail::Status(CaStatus::InvalidArgument, "size overflow".into()))?;
        let flat = slice(data, len, "data")?;
        let gens: Vec<Vector> = flat
            .chunks(dim.max(1))
            .take(count)
            .map(Vector::from_column_slice)
            .collect();
        store(out, PolyhedralCone::from_generators(dim, &gens, tol)?)
    })
}

/// Builds a cone from cone-file JSON text.
///
/// # Safety
/// `json` must be a NUL-terminated string and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ca_cone_from_json(
    json: *const c_char,
    tol: f64,
    out: *mut *mut CaCone,
) -> CaStatus {
    guard(|| {
        if json.is_null() {
            return Err(null("json"));
        }
        let text = CStr::from_ptr(json)
            .to_str()
            .map_err(|e| Error::Parse(e.to_string()))?;
        let spec: ConeSpec = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        store(out, PolyhedralCone::from_spec(&spec, tol)?)
    })
}

/// Canonical cone-file JSON of `cone`; release with [`ca_string_free`].
///
/// # Safety
/// `cone` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ca_cone_to_json(
    cone_ptr: *const CaCone,
    out: *mut *mut c_char,
) -> CaStatus {
    guard(|| {
        let k = cone(cone_ptr, "cone")?;
        if out.is_null() {
            return Err(null("out"));
        }
        let text = serde_json::to_string(&k.to_spec())
            .map_err(|e| Fail::Status(CaStatus::Numerical, e.to_string()))?;
        *out = CString::new(text).unwrap_or_default().into_raw();
        Ok(())
    })
}

/// # Safety
/// `s` must come from this library or be null.
#[no_mangle]
pub unsafe extern "C" fn ca_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// # Safety
/// `cone` must come from this library or be null, and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn ca_cone_free(cone_ptr: *mut CaCone) {
    if !cone_ptr.is_null() {
        drop(Box::from_raw(cone_ptr));
    }
}

/// Ambient dimension and the numbers of generators and halfspaces.
///
/// # Safety
/// `cone` must be a live handle; output pointers may be null.
#[no_mangle]
pub unsafe extern "C" fn ca_cone_shape(
    cone_ptr: *const CaCone,
    dim: *mut usize,
    generators: *mut usize,
    halfspaces: *mut usize,
) -> CaStatus {
    guard(|| {
        let k = cone(cone_ptr, "cone")?;
        for (p, v) in [
            (dim, k.dim()),
            (generators, k.generators().len()),
            (halfspaces, k.halfspaces().len()),
        ] {
            if let Some(p) = p.as_mut() {
                *p = v;
            }
        }
        Ok(())
    })
}

unsafe fn copy_rows(
    rows: &[Vector],
    dim: usize,
    out: *mut f64,
    capacity: usize,
) -> Result<(), Fail> {
    let need = rows.len() * dim;
    if capacity < need {
        return Err(Fail::Status(
            CaStatus::BufferTooSmall,
            format!("buffer holds {capacity} doubles, {need} needed"),
        ));
    }
    if need == 0 {
        return Ok(());
    }
    if out.is_null() {
        return Err(null("out"));
    }
    for (i, r) in rows.iter().enumerate() {
        ptr::copy_nonoverlapping(r.as_slice().as_ptr(), out.add(i * dim), dim);
    }
    Ok(())
}

/// Copies the unit generators, row-major, into `out` of `capacity` doubles.
///
/// # Safety
/// `cone` must be a live handle and `out` must hold `capacity` doubles.
#[no_mangle]
pub unsafe extern "C" fn ca_cone_generators(
    cone_ptr: *const CaCone,
    out: *mut f64,
    capacity: usize,
) -> CaStatus {
    guard(|| {
        let k = cone(cone_ptr, "cone")?;
        copy_rows(k.generators(), k.dim(), out, capacity)
    })
}

/// Copies the unit halfspace normals `a` (cone is `<a, x> <= 0`).
///
/// # Safety
/// `cone` must be a live handle and `out` must hold `capacity` doubles.
#[no_mangle]
pub unsafe extern "C" fn ca_cone_halfspaces(
    cone_ptr: *const CaCone,
    out: *mut f64,
    capacity: usize,
) -> CaStatus {
    guard(|| {
        let k = cone(cone_ptr, "cone")?;
        copy_rows(k.halfspaces(), k.dim(), out, capacity)
    })
}

macro_rules! unary {
    ($(#[$m:meta])* $name:ident, $op:expr) => {
        $(#[$m])*
        ///
        /// # Safety
        /// `cone` must be a live handle and `out` writable.
        #[no_mangle]
        pub unsafe extern "C" fn $name(cone_ptr: *const CaCone, out: *mut *mut CaCone) -> CaStatus {
            guard(|| {
                let k = cone(cone_ptr, "cone")?;
                let f: fn(&PolyhedralCone) -> cone_angles::Result<PolyhedralCone> = $op;
                store(out, f(k)?)
            })
        }
    };
}

macro_rules! binary {
    ($(#[$m:meta])* $name:ident, $op:expr) => {
        $(#[$m])*
        ///
        /// # Safety
        /// `a` and `b` must be live handles and `out` writable.
        #[no_mangle]
        pub unsafe extern "C" fn $name(
            a: *const CaCone,
            b: *const CaCone,
            out: *mut *mut CaCone,
        ) -> CaStatus {
            guard(|| {
                let (a, b) = (cone(a, "a")?, cone(b, "b")?);
                let f: fn(&PolyhedralCone, &PolyhedralCone) -> cone_angles::Result<PolyhedralCone> = $op;
                store(out, f(a, b)?)
            })
        }
    };
}

unary!(
    /// Polar cone.
    ca_cone_polar,
    |k| k.polar()
);
unary!(
    /// Dual cone.
    ca_cone_dual,
    |k| k.dual()
);
unary!(
    /// The cone `-K`.
    ca_cone_negate,
    |k| Ok(k.negate())
);
binary!(
    /// Minkowski sum.
    ca_cone_sum,
    |a, b| a.sum(b)
);
binary!(
    /// Intersection.
    ca_cone_intersect,
    |a, b| a.intersect(b)
);

/// Membership test for a point of length `dim`.
///
/// # Safety
/// `cone` must be a live handle, `x` must hold the cone's dimension in
/// doubles and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ca_cone_contains(
    cone_ptr: *const CaCone,
    x: *const f64,
    tol: f64,
    out: *mut bool,
) -> CaStatus {
    guard(|| {
        let k = cone(cone_ptr, "cone")?;
        let x = Vector::from_column_slice(slice(x, k.dim(), "x")?);
        let r = k.contains(&x, tol)?;
        *out.as_mut().ok_or_else(|| null("out"))? = r;
        Ok(())
    })
}

/// Set equality within `tol`.
///
/// # Safety
/// `a`, `b` must be live handles and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ca_cone_equals(
    a: *const CaCone,
    b: *const CaCone,
    tol: f64,
    out: *mut bool,
) -> CaStatus {
    guard(|| {
        let r = cone(a, "a")?.equals(cone(b, "b")?, tol)?;
        *out.as_mut().ok_or_else(|| null("out"))? = r;
        Ok(())
    })
}

/// Projection of `x` onto the cone, written to `point`; the polar part
/// `x - point` goes to `residual` if it is non-null.
///
/// # Safety
/// `x` and `point` (and `residual` if non-null) must hold the cone's
/// dimension in doubles.
#[no_mangle]
pub unsafe extern "C" fn ca_cone_project(
    cone_ptr: *const CaCone,
    x: *const f64,
    point: *mut f64,
    residual: *mut f64,
) -> CaStatus {
    guard(|| {
        let k = cone(cone_ptr, "cone")?;
        let x = Vector::from_column_slice(slice(x, k.dim(), "x")?);
        let r = project(k, &x)?;
        write_vector(point, &r.point)?;
        if !residual.is_null() {
            write_vector(residual, &r.residual)?;
        }
        Ok(())
    })
}

unsafe fn finish_angle(
    r: AngleResult,
    out: *mut CaAngle,
    x_star: *mut f64,
    y_star: *mut f64,
) -> Result<(), Fail> {
    let out = out.as_mut().ok_or_else(|| null("out"))?;
    let mut has_certificate = false;
    if let Some(c) = &r.certificate {
        if !x_star.is_null() && !y_star.is_null() {
            write_vector(x_star, &c.x)?;
            write_vector(y_star, &c.y)?;
            has_certificate = true;
        }
    }
    *out = CaAngle {
        cosine: r.cosine,
        angle: r.angle,
        attained: r.attained,
        flagged: r.flagged,
        has_certificate,
    };
    Ok(())
}

fn dixmier(
    a: &PolyhedralCone,
    b: &PolyhedralCone,
    method: CaMethod,
    samples: usize,
) -> cone_angles::Result<AngleResult> {
    match method {
        CaMethod::Exact => cos_dixmier_exact(a, b),
        CaMethod::Iterative => Ok(cos_dixmier_iterative(a, b, &[], 1000, 1e-15)?.0),
        CaMethod::Oracle => cos_dixmier_oracle(a, b, samples),
    }
}

/// Dixmier cosine. `samples` is only used by the oracle. Certificates are
/// written when both `x_star` and `y_star` are non-null.
///
/// # Safety
/// `a`, `b` must be live handles, `out` writable, and non-null certificate
/// buffers must hold the ambient dimension in doubles.
#[no_mangle]
pub unsafe extern "C" fn ca_cos_dixmier(
    a: *const CaCone,
    b: *const CaCone,
    method: CaMethod,
    samples: usize,
    out: *mut CaAngle,
    x_star: *mut f64,
    y_star: *mut f64,
) -> CaStatus {
    guard(|| {
        let r = dixmier(cone(a, "a")?, cone(b, "b")?, method, samples)?;
        finish_angle(r, out, x_star, y_star)
    })
}

/// Friedrichs cosine: the Dixmier cosine of the pair reduced by the polar
/// of the intersection.
///
/// # Safety
/// As for [`ca_cos_dixmier`].
#[no_mangle]
pub unsafe extern "C" fn ca_cos_friedrichs(
    a: *const CaCone,
    b: *const CaCone,
    method: CaMethod,
    samples: usize,
    out: *mut CaAngle,
    x_star: *mut f64,
    y_star: *mut f64,
) -> CaStatus {
    guard(|| {
        let (ra, rb) = friedrichs_reduction(cone(a, "a")?, cone(b, "b")?)?;
        let r = dixmier(&ra, &rb, method, samples)?;
        finish_angle(r, out, x_star, y_star)
    })
}

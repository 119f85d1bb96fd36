// Build with: wasm-pack build crates/web --target web --out-dir www/pkg
import init, { theta_curve, sequence_zeros, dominant_spiral } from "./pkg/queenpoly_web.js";

const $ = (id) => document.getElementById(id);

function show(id, text, isError = false) {
  const el = $(id);
  el.textContent = text;
  el.className = isError ? "err" : "";
}

// Fit points [[x, y], ...] into the canvas, equal aspect, and return a mapper.
function frame(ctx, pts, pad = 20) {
  const xs = pts.map((p) => p[0]), ys = pts.map((p) => p[1]);
  const x0 = Math.min(0, ...xs), x1 = Math.max(0, ...xs);
  const y0 = Math.min(0, ...ys), y1 = Math.max(0, ...ys);
  const { width: w, height: h } = ctx.canvas;
  const s = Math.min((w - 2 * pad) / (x1 - x0 || 1), (h - 2 * pad) / (y1 - y0 || 1));
  const map = ([x, y]) => [pad + (x - x0) * s, h - pad - (y - y0) * s];
  ctx.clearRect(0, 0, w, h);
  ctx.strokeStyle = "#bbb";
  ctx.beginPath();
  let [ax, ay] = map([x0, 0]), [bx] = map([x1, 0]);
  ctx.moveTo(ax, ay); ctx.lineTo(bx, ay);
  [ax, ay] = map([0, y0]); const [, by] = map([0, y1]);
  ctx.moveTo(ax, ay); ctx.lineTo(ax, by);
  ctx.stroke();
  return map;
}

function polyline(ctx, pts, map, color) {
  ctx.strokeStyle = color;
  ctx.beginPath();
  pts.forEach((p, i) => {
    const [x, y] = map(p);
    i ? ctx.lineTo(x, y) : ctx.moveTo(x, y);
  });
  ctx.stroke();
}

function triples(arr, start = 0) {
  const out = [];
  for (let i = start; i + 2 < arr.length; i += 3) out.push([arr[i], arr[i + 1], arr[i + 2]]);
  return out;
}

function drawCurve() {
  try {
    const data = theta_curve(parseFloat($("c-zmin").value), parseFloat($("c-zmax").value), 20000);
    const pts = triples(data).map(([, re, im]) => [re, im]);
    const ctx = $("c-canvas").getContext("2d");
    polyline(ctx, pts, frame(ctx, pts), "#1f5fbf");
    show("c-out", `${pts.length} samples; t1 at left end ${pts[0].map((v) => v.toFixed(5)).join(" + i")}`);
  } catch (e) {
    show("c-out", String(e), true);
  }
}

function drawZeros() {
  try {
    const m = parseInt($("z-m").value, 10);
    const zeros = Array.from(sequence_zeros($("z-alpha").value, m));
    const ctx = $("z-canvas").getContext("2d");
    const { width: w, height: h } = ctx.canvas;
    ctx.clearRect(0, 0, w, h);
    // log scale on -(z + 9/4), so the critical point sits at the right edge
    const u = zeros.map((z) => Math.log10(Math.max(-(z + 2.25), 1e-12)));
    const lo = Math.min(...u, -1), hi = Math.max(...u, 1);
    const x = (v) => w - 20 - ((v - lo) / (hi - lo)) * (w - 40);
    ctx.strokeStyle = "#999";
    ctx.beginPath(); ctx.moveTo(10, h / 2); ctx.lineTo(w - 10, h / 2); ctx.stroke();
    ctx.fillStyle = "#c03";
    u.forEach((v) => { ctx.beginPath(); ctx.arc(x(v), h / 2, 4, 0, 2 * Math.PI); ctx.fill(); });
    const inside = zeros.filter((z) => z < -2.25).length;
    show("z-out", `${zeros.length} real zeros (${inside} below -9/4), floor(m/2) = ${Math.floor(m / 2)}\n` +
      zeros.map((z) => z.toPrecision(10)).join("  "));
  } catch (e) {
    show("z-out", String(e), true);
  }
}

function drawSpiral() {
  try {
    const m = parseInt($("s-m").value, 10);
    const data = dominant_spiral(m);
    const [count, delta, expected, sturm] = data.slice(0, 4);
    const pts = triples(data, 4).map(([, x, y]) => [x, y]);
    const ctx = $("s-canvas").getContext("2d");
    polyline(ctx, pts, frame(ctx, pts), "#2a8a3a");
    show("s-out", `axis sign changes ${count}, Sturm roots ${sturm}; ` +
      `total arg change ${delta.toFixed(4)} (m*pi/2 + 3pi/4 = ${expected.toFixed(4)})`);
  } catch (e) {
    show("s-out", String(e), true);
  }
}

await init();
$("c-go").onclick = drawCurve;
$("z-go").onclick = drawZeros;
$("s-go").onclick = drawSpiral;
drawCurve();
drawZeros();
drawSpiral();

// Expects the wasm-bindgen output in ./pkg (see the README for the build step).
import init, { construct_alternating, circulant, ppd } from "./pkg/grr_web.js";

const $ = (id) => document.getElementById(id);

function show(out, value) {
  if (value.error) {
    out.innerHTML = "";
    const span = document.createElement("span");
    span.className = "error";
    span.textContent = value.error;
    out.appendChild(span);
    return false;
  }
  return true;
}

// Vertex positions around a circle, vertex 0 at the top.
function ring(canvas, n, radius) {
  const cx = canvas.width / 2, cy = canvas.height / 2;
  return Array.from({ length: n }, (_, i) => {
    const t = (2 * Math.PI * i) / n - Math.PI / 2;
    return [cx + radius * Math.cos(t), cy + radius * Math.sin(t)];
  });
}

function dot(ctx, [x, y], r, color) {
  ctx.fillStyle = color;
  ctx.beginPath();
  ctx.arc(x, y, r, 0, 2 * Math.PI);
  ctx.fill();
}

function line(ctx, [x1, y1], [x2, y2], color, width) {
  ctx.strokeStyle = color;
  ctx.lineWidth = width;
  ctx.beginPath();
  ctx.moveTo(x1, y1);
  ctx.lineTo(x2, y2);
  ctx.stroke();
}

function drawAlternating(v) {
  const canvas = $("alt-canvas");
  const ctx = canvas.getContext("2d");
  ctx.clearRect(0, 0, canvas.width, canvas.height);
  // Points 1..n on the circle; the p-cycle of x is drawn as the outer polygon.
  const pos = ring(canvas, v.n, 180);
  for (let i = 0; i < v.p; i++) line(ctx, pos[i], pos[(i + 1) % v.p], "#999", 1);
  for (const [a, b] of v.transpositions) line(ctx, pos[a - 1], pos[b - 1], "#16a34a", 2);
  const fixY = new Set(v.fix_y), fixC = new Set(v.fix_conjugated_y);
  const small = v.n > 60;
  ctx.font = "11px system-ui";
  pos.forEach((pt, i) => {
    const label = i + 1;
    let color = label <= v.p ? "#555" : "#aaa";
    if (fixY.has(label) && fixC.has(label)) color = "#7c3aed";
    else if (fixY.has(label)) color = "#2563eb";
    else if (fixC.has(label)) color = "#dc2626";
    dot(ctx, pt, small ? 3 : 5, color);
    if (!small) {
      ctx.fillStyle = "#222";
      const [x, y] = pt, cx = canvas.width / 2, cy = canvas.height / 2;
      ctx.fillText(String(label), cx + (x - cx) * 1.11 - 6, cy + (y - cy) * 1.11 + 4);
    }
  });
}

function drawCirculant(v) {
  const canvas = $("circ-canvas");
  const ctx = canvas.getContext("2d");
  ctx.clearRect(0, 0, canvas.width, canvas.height);
  const pos = ring(canvas, v.n, 190);
  const width = v.edges.length > 2000 ? 0.3 : 1;
  for (const [a, b] of v.edges) line(ctx, pos[a], pos[b], "#64748b", width);
  for (const pt of pos) dot(ctx, pt, v.n > 100 ? 2 : 4, "#0f172a");
}

function runAlternating(event) {
  event?.preventDefault();
  const v = JSON.parse(construct_alternating(Number($("alt-n").value), Number($("alt-k").value)));
  const out = $("alt-out");
  if (!show(out, v)) return;
  drawAlternating(v);
  out.textContent = [
    `p = ${v.p}   (window ${JSON.stringify(v.window)})`,
    `x = ${v.x}`,
    `y = ${v.y}`,
    `Fix(y)        = {${v.fix_y.join(", ")}}`,
    `Fix(x^-1 y x) = {${v.fix_conjugated_y.join(", ")}}`,
    `k = ${v.k}: |Aut(G,S)| = ${v.aut_gs_order}` +
      (v.admissible ? "" : "   (n < 6*ceil(k/2) - 12, so not covered by the certificate)"),
  ].join("\n");
}

function runCirculant(event) {
  event?.preventDefault();
  const v = JSON.parse(circulant(Number($("circ-n").value), $("circ-jumps").value));
  const out = $("circ-out");
  if (!show(out, v)) return;
  drawCirculant(v);
  out.textContent = [
    `S = {${v.connection_set.join(", ")}}`,
    `edges: ${v.edges.length}`,
    `|Aut| = ${v.aut_order}`,
    `multipliers u with uS = S: {${v.multipliers.join(", ")}}`,
    `n * #multipliers = ${v.n * v.multipliers.length}`,
    v.is_grr ? "a GRR of C_n" : "not a GRR (x -> -x is always an automorphism)",
  ].join("\n");
}

function runPpd(event) {
  event?.preventDefault();
  const v = JSON.parse(ppd(Number($("ppd-r").value), Number($("ppd-m").value)));
  const out = $("ppd-out");
  if (!show(out, v)) return;
  const factors = v.factorization.map(([p, e]) => (e > 1 ? `${p}^${e}` : `${p}`)).join(" * ");
  out.textContent = [
    `${v.r}^${v.m} - 1 = ${v.value} = ${factors || "1"}`,
    `primitive prime divisors: ${v.ppd.length ? v.ppd.join(", ") : "none"}`,
  ].join("\n");
}

await init();
$("status").textContent = "";
$("alt-form").addEventListener("submit", runAlternating);
$("circ-form").addEventListener("submit", runCirculant);
$("ppd-form").addEventListener("submit", runPpd);
runAlternating();
runCirculant();
runPpd();

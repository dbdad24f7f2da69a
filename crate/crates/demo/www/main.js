// Build with: wasm-pack build crates/demo --target web --out-dir www/pkg
import init, { window_curve, generic_bound, quadratic_class_group } from "./pkg/genbound_demo.js";

const $ = (id) => document.getElementById(id);
const show = (id, json) => { $(id).textContent = JSON.stringify(JSON.parse(json), null, 2); };

function plotCurve(data) {
  const canvas = $("curve-canvas");
  const ctx = canvas.getContext("2d");
  ctx.clearRect(0, 0, canvas.width, canvas.height);
  if (!data.curve || data.curve.length === 0) return;
  const fs = data.curve.map((p) => p[1]);
  const fMin = Math.min(...fs);
  const fMax = Math.min(Math.max(...fs), fMin + 2);
  const x = (c) => 40 + ((c - 1) / (data.c_max - 1)) * (canvas.width - 60);
  const y = (f) => canvas.height - 20 - ((Math.min(f, fMax) - fMin) / (fMax - fMin || 1)) * (canvas.height - 40);
  ctx.beginPath();
  data.curve.forEach(([c, f], i) => (i ? ctx.lineTo(x(c), y(f)) : ctx.moveTo(x(c), y(f))));
  ctx.stroke();
  ctx.fillStyle = "crimson";
  ctx.beginPath();
  ctx.arc(x(data.c_star), y(data.f_star), 4, 0, 2 * Math.PI);
  ctx.fill();
}

await init();

$("curve-go").onclick = () => {
  const out = window_curve(Number($("curve-n").value), 400);
  const data = JSON.parse(out);
  plotCurve(data);
  delete data.curve;
  $("curve-out").textContent = JSON.stringify(data, null, 2);
};
$("gen-go").onclick = () =>
  show("gen-out", generic_bound(Number($("gen-n").value), Number($("gen-r1").value), Number($("gen-x").value), $("gen-floor").checked));
$("cg-go").onclick = () => show("cg-out", quadratic_class_group(BigInt($("cg-d").value), Number($("cg-b").value)));

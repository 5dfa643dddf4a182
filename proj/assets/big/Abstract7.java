abstract class Abstract7 extends Abstract4 {
}

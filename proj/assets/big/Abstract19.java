abstract class Abstract19 extends Abstract9 {
}

class S94 extends Abstract6 {
  public void enter() {
    new S71();
    new S88();
  }
  public void exit() {
    new S74();
    try {
      send("msg14");
      new S9();
      new S56();
      try {
        if (x1 > 0) {
          new S68();
          send("msg13");
          new S14();
          new S49();
        }
      } catch (IOException e) {
        switch (event) {
          case EV2822:
            log("note");
            break;
          case EV2823:
            new State();
            send("msg5");
            send("msg13");
            break;
        }
      } catch (IOException e) {
        switch (event) {
          case EV2824:
            new S41();
            send("msg7");
            new S87();
            break;
          case EV2825:
            new S38();
            break;
          case EV2826:
            new S78();
            log("note");
            send("msg10");
            log("note");
            break;
        }
        switch (event) {
          case EV2827:
            send("msg9");
            new S78();
            new S98();
            break;
          case EV2828:
            new S13();
            new S37();
            break;
        }
      }
    } catch (IllegalStateException e) {
      log("note");
      new S72();
      try {
        new S74();
        new S34();
        if (x5 > 0) {
          send("msg14");
          new S96();
        }
        new S73();
      } catch (IllegalStateException e) {
        send("msg6");
        send("msg9");
        send("msg16");
      }
    } catch (IllegalStateException e) {
      try {
        if (x1 > 0) {
          new Helper();
        } else {
          new S58();
        }
      } finally {
        send("msg6");
        try {
          new S45();
          send("msg17");
          new S2();
        } catch (IllegalStateException e) {
          new S27();
          send("msg9");
          send("msg3");
        }
        send("msg18");
      }
      new S3();
    }
  }
  void handle() {
    switch (event) {
      case EV2829:
        new S32();
        break;
      case EV2830:
        new S20();
        try {
          try {
            new S58();
            send("msg16");
            log("note");
          } catch (TimeoutException e) {
            new S37();
            send("msg14");
            new S45();
            send("msg5");
          } finally {
            new S86();
            send("msg14");
            send("msg3");
            new S11();
          }
          new Helper();
          try {
            new S37();
            send("msg9");
            log("note");
          } catch (TimeoutException e) {
            new S5();
          } finally {
            send("msg15");
            send("msg16");
            new S7();
          }
          try {
            new S9();
            send("msg5");
            new S54();
            new S67();
          } catch (IOException e) {
            send("msg13");
            new S88();
          } finally {
            send("msg1");
          }
        } catch (TimeoutException e) {
          if (x0 > 0) {
            send("msg17");
          }
        } catch (IOException e) {
          new S43();
        }
        break;
      case EV2831:
        new S19();
        send("msg10");
        switch (event) {
          case EV2832:
            switch (event) {
              case EV2833:
                new S7();
                new Helper();
                send("msg4");
                send("msg19");
                break;
              case EV2834:
                new S10();
                break;
              case EV2835:
                send("msg16");
                new S60();
                send("msg11");
                new S74();
                break;
            }
            send("msg8");
            switch (event) {
              case EV2836:
                log("note");
                send("msg2");
                new S97();
                break;
              case EV2837:
                new S32();
                break;
            }
            break;
          case EV2838:
            if (x2 > 0) {
              send("msg11");
              new S90();
              new S97();
              new S57();
            } else {
              new S57();
              log("note");
              new S79();
            }
            switch (event) {
              case EV2839:
                send("msg16");
                log("note");
                new S26();
                break;
              case EV2840:
                log("note");
                new S16();
                new S24();
                break;
              case EV2841:
                log("note");
                send("msg5");
                new S27();
                break;
            }
            switch (event) {
              case EV2842:
                new Helper();
                new S81();
                new S67();
                break;
            }
            break;
        }
        break;
    }
    new S63();
  }
  public void tick() {
    if (x7 > 0) {
      switch (event) {
        case EV2843:
          log("note");
          break;
        case EV2844:
          switch (event) {
            case EV2845:
              log("note");
              log("note");
              send("msg19");
              send("msg3");
              break;
            case EV2846:
              new S85();
              new S45();
              break;
          }
          break;
      }
      send("msg7");
    } else {
      log("note");
      try {
        try {
          send("msg8");
        } catch (TimeoutException e) {
          new Helper();
          new S11();
        } finally {
          send("msg3");
        }
        new S62();
      } catch (IOException e) {
        switch (event) {
          case EV2847:
            send("msg4");
            break;
        }
        new S50();
      } finally {
        send("msg15");
        new S96();
        new S14();
        log("note");
      }
    }
    new S98();
    if (x2 > 0) {
      new S60();
      send("msg19");
      try {
        new S41();
        send("msg3");
      } catch (IllegalStateException e) {
        if (x3 > 0) {
          log("note");
          send("msg4");
          send("msg3");
          new S85();
        } else {
          new S46();
          new S12();
          send("msg1");
        }
      } catch (IllegalStateException e) {
        send("msg4");
        new S68();
        log("note");
      }
    }
  }
  void reset() {
    if (x6 > 0) {
      new S65();
    } else {
      switch (event) {
        case EV2848:
          new S2();
          new S60();
          break;
      }
      switch (event) {
        case EV2849:
          switch (event) {
            case EV2850:
              send("msg14");
              send("msg5");
              send("msg1");
              new Helper();
              break;
            case EV2851:
              log("note");
              new S47();
              break;
          }
          new S42();
          new S89();
          break;
        case EV2852:
          send("msg10");
          send("msg14");
          send("msg10");
          switch (event) {
            case EV2853:
              new S49();
              send("msg0");
              break;
          }
          break;
      }
    }
    send("msg11");
  }
  void open() {
    send("msg0");
    switch (event) {
      case EV2854:
        send("msg3");
        switch (event) {
          case EV2855:
            log("note");
            new S26();
            new S62();
            new S15();
            break;
          case EV2856:
            new S19();
            break;
          case EV2857:
            send("msg16");
            break;
        }
        break;
    }
    log("note");
  }
  public void close() {
    send("msg11");
    switch (event) {
      case EV2858:
        new S84();
        switch (event) {
          case EV2859:
            try {
              log("note");
              log("note");
              send("msg6");
            } catch (TimeoutException e) {
              log("note");
              send("msg0");
            } finally {
              log("note");
              new S41();
              send("msg14");
              new S6();
            }
            break;
          case EV2860:
            send("msg18");
            new S42();
            break;
        }
        if (x4 > 0) {
          new S89();
          if (x5 > 0) {
            log("note");
            new S95();
            new S53();
            new S2();
          } else {
            send("msg19");
          }
          send("msg4");
        } else {
          switch (event) {
            case EV2861:
              new S86();
              send("msg5");
              new S5();
              break;
            case EV2862:
              send("msg8");
              log("note");
              log("note");
              break;
          }
          if (x4 > 0) {
            send("msg4");
            new S73();
            send("msg17");
            new S48();
          } else {
            new Helper();
            send("msg12");
            new S63();
          }
          if (x8 > 0) {
            log("note");
            new State();
            new S37();
          } else {
            new S71();
            send("msg10");
            send("msg4");
          }
          new S50();
        }
        send("msg18");
        break;
      case EV2863:
        new S19();
        new S91();
        break;
      case EV2864:
        switch (event) {
          case EV2865:
            new S78();
            new S6();
            break;
          case EV2866:
            send("msg7");
            new S67();
            break;
          case EV2867:
            send("msg6");
            send("msg7");
            break;
        }
        if (x7 > 0) {
          if (x6 > 0) {
            send("msg18");
          }
          log("note");
          send("msg17");
          new S4();
        }
        break;
    }
    if (x5 > 0) {
      try {
        try {
          send("msg11");
          new S60();
          new S24();
          new S94();
        } catch (IllegalStateException e) {
          new S33();
          log("note");
        }
      } catch (TimeoutException e) {
        new S10();
      } finally {
        switch (event) {
          case EV2868:
            log("note");
            new S12();
            new S78();
            send("msg4");
            break;
        }
        if (x4 > 0) {
          new Helper();
        } else {
          new S70();
          send("msg18");
          send("msg11");
        }
      }
    }
    new S46();
  }
  void start() {
    new S86();
    switch (event) {
      case EV2869:
        new S30();
        new Helper();
        break;
      case EV2870:
        new S97();
        break;
    }
    send("msg14");
    log("note");
  }
  void stop() {
    new State();
    if (x2 > 0) {
      new S19();
      try {
        try {
          send("msg4");
        } catch (IOException e) {
          new S27();
        }
        new S86();
        new S72();
        new S94();
      } catch (TimeoutException e) {
        new S43();
        switch (event) {
          case EV2871:
            log("note");
            new Helper();
            break;
          case EV2872:
            send("msg17");
            new S1();
            new S72();
            break;
          case EV2873:
            send("msg7");
            log("note");
            send("msg2");
            break;
        }
        send("msg1");
      }
    } else {
      send("msg14");
      if (x3 > 0) {
        send("msg17");
        new S80();
        new S10();
      }
      if (x3 > 0) {
        new S19();
        send("msg4");
        try {
          new S92();
          new S99();
        } catch (IOException e) {
          new S74();
          send("msg7");
          send("msg8");
        }
        if (x0 > 0) {
          new S40();
          send("msg12");
          new Helper();
          new S80();
        }
      }
      new S40();
    }
  }
  void pause() {
    new S97();
    if (x1 > 0) {
      new S92();
      send("msg5");
      switch (event) {
        case EV2874:
          switch (event) {
            case EV2875:
              send("msg9");
              log("note");
              new S76();
              break;
          }
          switch (event) {
            case EV2876:
              new S12();
              new S37();
              new S12();
              new S56();
              break;
          }
          switch (event) {
            case EV2877:
              send("msg16");
              send("msg19");
              send("msg14");
              break;
            case EV2878:
              log("note");
              new S94();
              send("msg1");
              send("msg8");
              break;
          }
          break;
        case EV2879:
          new S84();
          new S8();
          log("note");
          break;
        case EV2880:
          new S14();
          switch (event) {
            case EV2881:
              new S32();
              new S6();
              new S97();
              new S57();
              break;
            case EV2882:
              new Helper();
              send("msg6");
              new S49();
              send("msg4");
              break;
            case EV2883:
              new S92();
              send("msg6");
              new S87();
              log("note");
              break;
          }
          try {
            log("note");
          } finally {
            new S24();
            log("note");
          }
          break;
      }
    }
  }
}
